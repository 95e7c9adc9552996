#include "gseq/pattern.hpp"

#include <cctype>
#include <sstream>

#include "gseq/errors.hpp"

namespace gseq::graphcore {

PatternSpec PatternSpec::SingleVertex() {
    PatternSpec s;
    s.kind = Kind::single_vertex;
    return s;
}
PatternSpec PatternSpec::Complete(int k) {
    PatternSpec s;
    s.kind = Kind::complete;
    s.k = k;
    return s;
}
PatternSpec PatternSpec::Cycle(int k) {
    PatternSpec s;
    s.kind = Kind::cycle;
    s.k = k;
    return s;
}
PatternSpec PatternSpec::Path(int k) {
    PatternSpec s;
    s.kind = Kind::path;
    s.k = k;
    return s;
}
PatternSpec PatternSpec::Union(std::vector<PatternSpec> parts) {
    PatternSpec s;
    s.kind = Kind::pattern_union;
    s.children = std::move(parts);
    return s;
}
PatternSpec PatternSpec::Join(PatternSpec a, PatternSpec b) {
    PatternSpec s;
    s.kind = Kind::pattern_join;
    s.children.push_back(std::move(a));
    s.children.push_back(std::move(b));
    return s;
}
PatternSpec PatternSpec::CompleteMinus(int m, PatternSpec inner) {
    PatternSpec s;
    s.kind = Kind::complete_minus;
    s.m = m;
    s.children.push_back(std::move(inner));
    return s;
}
PatternSpec PatternSpec::Friendship(int k) {
    PatternSpec s;
    s.kind = Kind::friendship;
    s.k = k;
    return s;
}
PatternSpec PatternSpec::GenFriendship(int t, int r, int k) {
    PatternSpec s;
    s.kind = Kind::gen_friendship;
    s.t = t;
    s.r = r;
    s.k = k;
    return s;
}
PatternSpec PatternSpec::Z4() {
    PatternSpec s;
    s.kind = Kind::z4;
    return s;
}

std::string PatternSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::single_vertex: os << "K1"; break;
        case Kind::complete: os << 'K' << k; break;
        case Kind::cycle: os << 'C' << k; break;
        case Kind::path: os << 'P' << k; break;
        case Kind::friendship: os << 'F' << k; break;
        case Kind::gen_friendship: os << "F(" << t << ',' << r << ',' << k << ')'; break;
        case Kind::z4: os << "Z4"; break;
        case Kind::pattern_union: {
            os << "U(";
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) os << ',';
                os << children[i].to_string();
            }
            os << ')';
            break;
        }
        case Kind::pattern_join:
            os << "J(" << children[0].to_string() << ',' << children[1].to_string() << ')';
            break;
        case Kind::complete_minus:
            os << "M(" << m << ',' << children[0].to_string() << ')';
            break;
    }
    return os.str();
}

SimpleGraph build(const PatternSpec& spec) {
    using Kind = PatternSpec::Kind;
    switch (spec.kind) {
        case Kind::single_vertex:
            return SimpleGraph(1);
        case Kind::complete: {
            if (spec.k < 1) throw DomainError("Complete(k) needs k >= 1");
            SimpleGraph g(spec.k);
            for (int i = 0; i < spec.k; ++i)
                for (int j = i + 1; j < spec.k; ++j) g.add_edge(i, j);
            return g;
        }
        case Kind::cycle: {
            if (spec.k < 3) throw DomainError("Cycle(k) needs k >= 3");
            SimpleGraph g(spec.k);
            for (int i = 0; i < spec.k; ++i) g.add_edge(i, (i + 1) % spec.k);
            return g;
        }
        case Kind::path: {
            // k edges, k+1 vertices
            if (spec.k < 1) throw DomainError("Path(k) needs k >= 1");
            SimpleGraph g(spec.k + 1);
            for (int i = 0; i < spec.k; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Kind::pattern_union: {
            if (spec.children.empty()) throw DomainError("Union needs at least one member");
            SimpleGraph g = build(spec.children[0]);
            for (size_t i = 1; i < spec.children.size(); ++i)
                g = disjoint_union(g, build(spec.children[i]));
            return g;
        }
        case Kind::pattern_join:
            return join(build(spec.children[0]), build(spec.children[1]));
        case Kind::complete_minus: {
            SimpleGraph inner = build(spec.children[0]);
            if (inner.n() > spec.m)
                throw DomainError("CompleteMinus: inner graph does not fit in K_" +
                                  std::to_string(spec.m));
            SimpleGraph g = build(PatternSpec::Complete(spec.m));
            for (const Edge& e : inner.edges()) g.remove_edge(e.u, e.v);
            return g;
        }
        case Kind::friendship: {
            if (spec.k < 1) throw DomainError("Friendship(k) needs k >= 1");
            SimpleGraph g(2 * spec.k + 1);
            for (int i = 0; i < spec.k; ++i) {
                int a = 2 * i + 1, b = 2 * i + 2;
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
            return g;
        }
        case Kind::gen_friendship: {
            const int t = spec.t, r = spec.r, k = spec.k;
            if (t < 1 || k < 1 || r < 0 || r > t)
                throw DomainError("GenFriendship(t,r,k) needs t >= 1, k >= 1, 0 <= r <= t");
            SimpleGraph g(k * (t - r) + r);
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) g.add_edge(i, j);
            for (int copy = 0; copy < k; ++copy) {
                std::vector<int> verts;
                for (int i = 0; i < r; ++i) verts.push_back(i);
                for (int i = 0; i < t - r; ++i) verts.push_back(r + copy * (t - r) + i);
                for (size_t a = 0; a < verts.size(); ++a)
                    for (size_t b = a + 1; b < verts.size(); ++b)
                        if (!g.has_edge(verts[a], verts[b])) g.add_edge(verts[a], verts[b]);
            }
            return g;
        }
        case Kind::z4:
            return build(PatternSpec::CompleteMinus(4, PatternSpec::Path(2)));
    }
    throw DomainError("build: unreachable");
}

namespace {

class PatternParser {
public:
    explicit PatternParser(const std::string& text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }

    PatternSpec parse() {
        PatternSpec s = expr();
        if (pos_ != src_.size()) throw ParseError("pattern: trailing input at '" + rest() + "'");
        return s;
    }

private:
    std::string src_;
    size_t pos_ = 0;

    std::string rest() const { return src_.substr(pos_); }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() {
        if (pos_ >= src_.size()) throw ParseError("pattern: unexpected end of input");
        return src_[pos_++];
    }
    void expect(char c) {
        if (take() != c)
            throw ParseError(std::string("pattern: expected '") + c + "' before '" + rest() + "'");
    }

    int integer() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("pattern: expected integer before '" + rest() + "'");
        return std::stoi(src_.substr(start, pos_ - start));
    }

    PatternSpec expr() {
        char c = take();
        switch (c) {
            case 'K': return PatternSpec::Complete(integer());
            case 'C': return PatternSpec::Cycle(integer());
            case 'P': return PatternSpec::Path(integer());
            case 'Z': {
                int k = integer();
                if (k != 4) throw ParseError("pattern: only Z4 is defined");
                return PatternSpec::Z4();
            }
            case 'F': {
                if (peek() == '(') {
                    take();
                    int t = integer();
                    expect(',');
                    int r = integer();
                    expect(',');
                    int k = integer();
                    expect(')');
                    return PatternSpec::GenFriendship(t, r, k);
                }
                return PatternSpec::Friendship(integer());
            }
            case 'U': {
                expect('(');
                std::vector<PatternSpec> parts;
                parts.push_back(expr());
                while (peek() == ',') {
                    take();
                    parts.push_back(expr());
                }
                expect(')');
                return PatternSpec::Union(std::move(parts));
            }
            case 'J': {
                expect('(');
                PatternSpec a = expr();
                expect(',');
                PatternSpec b = expr();
                expect(')');
                return PatternSpec::Join(std::move(a), std::move(b));
            }
            case 'M': {
                expect('(');
                int m = integer();
                expect(',');
                PatternSpec inner = expr();
                expect(')');
                return PatternSpec::CompleteMinus(m, std::move(inner));
            }
            default:
                throw ParseError(std::string("pattern: unexpected character '") + c + "'");
        }
    }
};

} // namespace

PatternSpec parse_pattern(const std::string& text) {
    return PatternParser(text).parse();
}

bool validate_U(const SimpleGraph& U, int r) {
    if (r < 6) throw DomainError("validate_U: requires r >= 6");
    const int k = U.n();
    if (k < 7 || k > r + 1) return false;
    if (U.edge_count() < 6) return false;
    static const SimpleGraph k3_p3 =
        build(PatternSpec::Union({PatternSpec::Complete(3), PatternSpec::Path(3)}));
    static const SimpleGraph c4 = build(PatternSpec::Cycle(4));
    static const SimpleGraph z4 = build(PatternSpec::Z4());
    if (!contains(U, k3_p3)) return false;
    if (contains(U, c4)) return false;
    if (contains(U, z4)) return false;
    return true;
}

} // namespace gseq::graphcore
