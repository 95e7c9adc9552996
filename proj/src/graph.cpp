#include "gseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gseq/errors.hpp"

namespace gseq::graphcore {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw DomainError("SimpleGraph: negative vertex count");
    adj_.assign(static_cast<size_t>(n), BitRow(n));
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("add_edge: endpoint out of range");
    if (u == v) throw DomainError("add_edge: self-loop");
    if (has_edge(u, v)) throw DomainError("add_edge: edge already present");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v || !has_edge(u, v))
        throw DomainError("remove_edge: no such edge");
    adj_[static_cast<size_t>(u)].reset(v);
    adj_[static_cast<size_t>(v)].reset(u);
    --edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<size_t>(u)].next_set(u + 1); v != -1;
             v = adj_[static_cast<size_t>(u)].next_set(v + 1))
            out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

int SimpleGraph::induced_edge_count(std::span<const int> vertices) const {
    int c = 0;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j])) ++c;
    return c;
}

uint64_t SimpleGraph::canonical_code() const {
    if (n_ > 10) throw DomainError("canonical_code: limited to n <= 10");
    std::vector<int> perm(static_cast<size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++bit)
                if (has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    code |= uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string SimpleGraph::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << edge_count_ << '\n';
    for (const Edge& e : edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

SimpleGraph SimpleGraph::from_text(const std::string& text) {
    std::istringstream is(text);
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw ParseError("graph text: missing 'n m' header");
    if (n < 0 || m < 0) throw ParseError("graph text: negative header field");
    SimpleGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(is >> u >> v)) throw ParseError("graph text: missing edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("graph text: bad edge endpoints");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("graph text: repeated edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string tail;
    if (is >> tail) throw ParseError("graph text: trailing input");
    return g;
}

seqcore::DegreeSequence degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    return seqcore::DegreeSequence(std::move(d));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.n() + b.n());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(a.n() + e.u, a.n() + e.v);
    return g;
}

SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

bool embedding_valid(const SimpleGraph& host, const SimpleGraph& pattern,
                     const Embedding& emb) {
    if (static_cast<int>(emb.map.size()) != pattern.n()) return false;
    std::vector<bool> used(static_cast<size_t>(host.n()), false);
    for (int h : emb.map) {
        if (h < 0 || h >= host.n() || used[static_cast<size_t>(h)]) return false;
        used[static_cast<size_t>(h)] = true;
    }
    for (const Edge& e : pattern.edges())
        if (!host.has_edge(emb.map[static_cast<size_t>(e.u)], emb.map[static_cast<size_t>(e.v)]))
            return false;
    return true;
}

namespace {

class Matcher {
public:
    Matcher(const SimpleGraph& host, const SimpleGraph& pattern, uint64_t budget)
        : host_(host), budget_(budget), k_(pattern.n()) {
        order_.resize(static_cast<size_t>(k_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return pattern.degree(a) > pattern.degree(b);
        });

        host_order_.resize(static_cast<size_t>(host.n()));
        std::iota(host_order_.begin(), host_order_.end(), 0);
        std::stable_sort(host_order_.begin(), host_order_.end(), [&](int a, int b) {
            return host.degree(a) > host.degree(b);
        });

        adj_.assign(static_cast<size_t>(k_), std::vector<char>(static_cast<size_t>(k_), 0));
        for (int t = 0; t < k_; ++t)
            for (int s = 0; s < k_; ++s)
                adj_[static_cast<size_t>(t)][static_cast<size_t>(s)] = pattern.has_edge(
                    order_[static_cast<size_t>(t)], order_[static_cast<size_t>(s)]);

        // masks_[t][s]: surviving host candidates for position s once
        // positions < t are matched; level 0 is the degree filter
        masks_.assign(static_cast<size_t>(k_) + 1,
                      std::vector<BitRow>(static_cast<size_t>(k_), BitRow(host.n())));
        for (int s = 0; s < k_; ++s) {
            int want = pattern.degree(order_[static_cast<size_t>(s)]);
            for (int h = 0; h < host.n(); ++h)
                if (host.degree(h) >= want) masks_[0][static_cast<size_t>(s)].set(h);
        }
        assign_.assign(static_cast<size_t>(k_), -1);
        host_match_.assign(static_cast<size_t>(host.n()), -1);
        visited_ = BitRow(host.n());
    }

    ContainsResult run() {
        ContainsResult res;
        bool ok = descend(0);
        res.nodes = nodes_;
        if (exhausted_) {
            res.status = SearchStatus::budget_exhausted;
        } else if (ok) {
            res.status = SearchStatus::found;
            Embedding emb;
            emb.map.resize(static_cast<size_t>(k_));
            for (int t = 0; t < k_; ++t)
                emb.map[static_cast<size_t>(order_[static_cast<size_t>(t)])] =
                    assign_[static_cast<size_t>(t)];
            res.embedding = std::move(emb);
        }
        return res;
    }

private:
    bool descend(int t) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (t == k_) return true;

        const BitRow& cand = masks_[static_cast<size_t>(t)][static_cast<size_t>(t)];
        for (int h : host_order_) {
            if (!cand.test(h)) continue;
            // forward-check every unmatched position against this choice
            bool dead = false;
            for (int s = t + 1; s < k_; ++s) {
                BitRow m = masks_[static_cast<size_t>(t)][static_cast<size_t>(s)];
                m.reset(h);
                if (adj_[static_cast<size_t>(t)][static_cast<size_t>(s)])
                    m &= host_.neighbors(h);
                if (!m.any()) {
                    dead = true;
                    break;
                }
                masks_[static_cast<size_t>(t) + 1][static_cast<size_t>(s)] = std::move(m);
            }
            if (dead || !all_different(t + 1)) continue;
            assign_[static_cast<size_t>(t)] = h;
            if (descend(t + 1)) return true;
            if (exhausted_) return false;
        }
        assign_[static_cast<size_t>(t)] = -1;
        return false;
    }

    // Hall check: the unmatched positions must be assignable pairwise-distinct
    // hosts from their candidate masks (maximum bipartite matching).
    bool all_different(int level) {
        std::fill(host_match_.begin(), host_match_.end(), -1);
        for (int s = level; s < k_; ++s) {
            visited_.clear_all();
            if (!augment(s, level)) return false;
        }
        return true;
    }

    bool augment(int s, int level) {
        const BitRow& m = masks_[static_cast<size_t>(level)][static_cast<size_t>(s)];
        for (int h = m.next_set(0); h != -1; h = m.next_set(h + 1)) {
            if (visited_.test(h)) continue;
            visited_.set(h);
            if (host_match_[static_cast<size_t>(h)] == -1 ||
                augment(host_match_[static_cast<size_t>(h)], level)) {
                host_match_[static_cast<size_t>(h)] = s;
                return true;
            }
        }
        return false;
    }

    const SimpleGraph& host_;
    uint64_t budget_;
    int k_;
    uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> order_;      // pattern vertices by decreasing degree
    std::vector<int> host_order_; // host vertices by decreasing degree
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<BitRow>> masks_;
    std::vector<int> assign_;
    std::vector<int> host_match_;
    BitRow visited_;
};

} // namespace

ContainsResult contains_budgeted(const SimpleGraph& host, const SimpleGraph& pattern,
                                 uint64_t max_nodes) {
    if (pattern.n() > host.n()) return {SearchStatus::not_found, std::nullopt, 0};
    Matcher m(host, pattern, max_nodes);
    return m.run();
}

std::optional<Embedding> contains(const SimpleGraph& host, const SimpleGraph& pattern) {
    ContainsResult r = contains_budgeted(host, pattern, ~uint64_t{0});
    return r.embedding;
}

const char* to_string(TwoSwitchReject r) {
    switch (r) {
        case TwoSwitchReject::none: return "none";
        case TwoSwitchReject::missing_edge: return "missing_edge";
        case TwoSwitchReject::overlapping_endpoints: return "overlapping_endpoints";
        case TwoSwitchReject::replacement_present: return "replacement_present";
    }
    return "?";
}

TwoSwitchResult two_switch(const SimpleGraph& g, int a, int b, int c, int d) {
    if (a == b || c == d || a == c || a == d || b == c || b == d)
        return {std::nullopt, TwoSwitchReject::overlapping_endpoints};
    if (a < 0 || b < 0 || c < 0 || d < 0 || a >= g.n() || b >= g.n() || c >= g.n() || d >= g.n())
        return {std::nullopt, TwoSwitchReject::missing_edge};
    if (!g.has_edge(a, b) || !g.has_edge(c, d))
        return {std::nullopt, TwoSwitchReject::missing_edge};
    if (g.has_edge(a, c) || g.has_edge(b, d))
        return {std::nullopt, TwoSwitchReject::replacement_present};
    SimpleGraph out = g;
    out.remove_edge(a, b);
    out.remove_edge(c, d);
    out.add_edge(a, c);
    out.add_edge(b, d);
    return {std::move(out), TwoSwitchReject::none};
}

} // namespace gseq::graphcore
