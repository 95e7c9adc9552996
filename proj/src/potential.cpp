#include "gseq/potential.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gseq/errors.hpp"

namespace gseq::potential {

using graphcore::Embedding;
using graphcore::SimpleGraph;
using seqcore::DegreeSequence;

namespace {

// Erdos-Gallai feasibility of an (unsorted) residual-degree vector.
bool residual_feasible(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    const int n = static_cast<int>(d.size());
    if (n == 0) return true;
    if (d.back() < 0) return false;
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    long long head = 0;
    for (int t = 1; t <= n - 1; ++t) {
        head += d[static_cast<size_t>(t - 1)];
        long long bound = static_cast<long long>(t) * (t - 1);
        for (int j = t + 1; j <= n; ++j) bound += std::min(t, d[static_cast<size_t>(j - 1)]);
        if (head > bound) return false;
    }
    return true;
}

// Backtracking completion of residual degrees, vertex by vertex. Edges
// already in g are unavailable. For each vertex the neighbor subsets among
// later vertices are tried in lexicographic order, so the stream of
// completions is deterministic.
class Completer {
public:
    Completer(SimpleGraph g, std::vector<int> residual,
              const std::function<bool(const SimpleGraph&)>& visit)
        : g_(std::move(g)), res_(std::move(residual)), visit_(visit) {}

    // Returns false once the visitor has stopped the stream.
    bool run() { return descend(0); }

private:
    bool suffix_feasible(int from) const {
        std::vector<int> tail(res_.begin() + from, res_.end());
        return residual_feasible(std::move(tail));
    }

    bool descend(int v) {
        const int n = g_.n();
        if (v == n) return visit_(g_);
        if (!suffix_feasible(v)) return true;

        std::vector<int> cands;
        for (int u = v + 1; u < n; ++u)
            if (res_[static_cast<size_t>(u)] > 0 && !g_.has_edge(v, u)) cands.push_back(u);
        std::vector<int> chosen;
        return choose(v, cands, chosen, 0, res_[static_cast<size_t>(v)]);
    }

    bool choose(int v, const std::vector<int>& cands, std::vector<int>& chosen,
                size_t from, int need) {
        if (need == 0) {
            int saved = res_[static_cast<size_t>(v)];
            res_[static_cast<size_t>(v)] = 0;
            for (int u : chosen) {
                g_.add_edge(v, u);
                --res_[static_cast<size_t>(u)];
            }
            bool cont = descend(v + 1);
            for (int u : chosen) {
                g_.remove_edge(v, u);
                ++res_[static_cast<size_t>(u)];
            }
            res_[static_cast<size_t>(v)] = saved;
            return cont;
        }
        if (from + static_cast<size_t>(need) > cands.size()) return true;
        chosen.push_back(cands[from]);
        bool cont = choose(v, cands, chosen, from + 1, need - 1);
        chosen.pop_back();
        if (!cont) return false;
        return choose(v, cands, chosen, from + 1, need);
    }

    SimpleGraph g_;
    std::vector<int> res_;
    const std::function<bool(const SimpleGraph&)>& visit_;
};

void check_realize_preconditions(const DegreeSequence& pi, const RealizeOptions& opts) {
    if (!seqcore::is_graphical(pi)) throw DomainError("realizations: sequence is not graphical");
    if (!opts.override_limit && pi.n() > opts.max_n)
        throw DomainError("realizations: n exceeds the search limit (" +
                          std::to_string(opts.max_n) + "); pass override to accept the cost");
}

} // namespace

void realizations(const DegreeSequence& pi,
                  const std::function<bool(const SimpleGraph&)>& visit,
                  RealizeOptions opts) {
    check_realize_preconditions(pi, opts);
    Completer c(SimpleGraph(pi.n()), pi.terms(), visit);
    c.run();
}

std::vector<SimpleGraph> all_realizations(const DegreeSequence& pi, RealizeOptions opts) {
    std::vector<SimpleGraph> out;
    realizations(
        pi,
        [&](const SimpleGraph& g) {
            out.push_back(g);
            return true;
        },
        opts);
    return out;
}

namespace {

// Always-on witness validation; a failure here is a solver bug.
void check_witness(const PotentialWitness& w, const DegreeSequence& pi, const SimpleGraph& H) {
    if (!graphcore::embedding_valid(w.realization, H, w.embedding) ||
        !(graphcore::degree_sequence(w.realization) == pi))
        throw std::logic_error("potential: returned witness failed validation");
}

std::optional<PotentialWitness> potentially_pruned(const DegreeSequence& pi,
                                                   const SimpleGraph& H) {
    const int n = pi.n();
    const int k = H.n();

    // assignment[pos] = pattern vertex placed at position pos; every
    // bijection onto the top-k positions is tried, deduplicated by the
    // placed edge set.
    std::vector<int> assignment(static_cast<size_t>(k));
    std::iota(assignment.begin(), assignment.end(), 0);
    std::set<std::vector<uint64_t>> seen;

    do {
        bool feasible = true;
        for (int pos = 0; pos < k && feasible; ++pos)
            if (H.degree(assignment[static_cast<size_t>(pos)]) > pi[pos]) feasible = false;
        if (!feasible) continue;

        SimpleGraph placed(n);
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                if (H.has_edge(assignment[static_cast<size_t>(p)], assignment[static_cast<size_t>(q)]))
                    placed.add_edge(p, q);

        std::vector<uint64_t> key;
        for (int p = 0; p < k; ++p) key.insert(key.end(), placed.neighbors(p).words().begin(),
                                               placed.neighbors(p).words().end());
        if (!seen.insert(std::move(key)).second) continue;

        std::vector<int> residual(pi.terms());
        for (int p = 0; p < k; ++p) residual[static_cast<size_t>(p)] -= placed.degree(p);

        std::optional<SimpleGraph> found;
        Completer c(placed, residual, [&](const SimpleGraph& g) {
            found = g;
            return false;
        });
        c.run();
        if (found) {
            PotentialWitness w;
            w.realization = std::move(*found);
            w.embedding.map.resize(static_cast<size_t>(k));
            for (int pos = 0; pos < k; ++pos)
                w.embedding.map[static_cast<size_t>(assignment[static_cast<size_t>(pos)])] = pos;
            check_witness(w, pi, H);
            return w;
        }
    } while (std::next_permutation(assignment.begin(), assignment.end()));

    return std::nullopt;
}

std::optional<PotentialWitness> potentially_exhaustive(const DegreeSequence& pi,
                                                       const SimpleGraph& H,
                                                       RealizeOptions opts) {
    std::optional<PotentialWitness> witness;
    realizations(
        pi,
        [&](const SimpleGraph& g) {
            auto emb = graphcore::contains(g, H);
            if (!emb) return true;
            witness = PotentialWitness{g, std::move(*emb)};
            return false;
        },
        opts);
    if (witness) check_witness(*witness, pi, H);
    return witness;
}

} // namespace

std::optional<PotentialWitness> is_potentially(const DegreeSequence& pi, const SimpleGraph& H,
                                               PotentialMode mode, RealizeOptions opts) {
    if (!seqcore::is_graphical(pi)) throw DomainError("is_potentially: sequence is not graphical");
    if (H.n() > pi.n()) throw DomainError("is_potentially: pattern larger than the sequence");
    if (mode == PotentialMode::pruned) return potentially_pruned(pi, H);
    return potentially_exhaustive(pi, H, opts);
}

bool is_potentially_clique_top(const DegreeSequence& pi, int r) {
    if (r < 1) throw DomainError("is_potentially_clique_top: requires r >= 1");
    if (pi.n() < r + 1) throw DomainError("is_potentially_clique_top: requires n >= r+1");
    SimpleGraph clique(r + 1);
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) clique.add_edge(i, j);
    return is_potentially(pi, clique).has_value();
}

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::t2_1: return "T2_1";
        case RuleTag::t2_2: return "T2_2";
        case RuleTag::t2_3: return "T2_3";
        case RuleTag::t2_4: return "T2_4";
        case RuleTag::l2_2: return "L2_2";
        case RuleTag::l2_4: return "L2_4";
        case RuleTag::l2_5: return "L2_5";
        case RuleTag::l3_1: return "L3_1";
    }
    return "?";
}

std::optional<RuleTag> rule_tag_from_string(const std::string& name) {
    std::string norm;
    for (char c : name) {
        if (c == '.') c = '_';
        norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (norm == "T2_1") return RuleTag::t2_1;
    if (norm == "T2_2") return RuleTag::t2_2;
    if (norm == "T2_3") return RuleTag::t2_3;
    if (norm == "T2_4") return RuleTag::t2_4;
    if (norm == "L2_2") return RuleTag::l2_2;
    if (norm == "L2_4") return RuleTag::l2_4;
    if (norm == "L2_5") return RuleTag::l2_5;
    if (norm == "L3_1") return RuleTag::l3_1;
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("sufficient_condition: " + what);
}

// sigma lower bound shared by the l2_4 and l3_1 hypotheses; even_adjust is
// subtracted in the even n-r branch.
long long sigma_branch_bound(int r, int n, int even_adjust) {
    long long base = static_cast<long long>(r - 1) * (2LL * n - r) - 3LL * (n - r);
    return ((n - r) % 2 != 0) ? base - 1 : base - even_adjust;
}

} // namespace

bool sufficient_condition(const DegreeSequence& pi, SufficientRule rule) {
    if (!seqcore::is_graphical(pi))
        throw DomainError("sufficient_condition: sequence is not graphical");
    const int n = pi.n();
    const int r = rule.r;

    auto degree_floor = [&](int upto) { // d_i >= 2r - i for i = 1..upto
        for (int i = 1; i <= upto; ++i)
            if (pi.d(i) < 2 * r - i) return false;
        return true;
    };

    switch (rule.tag) {
        case RuleTag::t2_1:
            require(r >= 1, "t2_1 needs r >= 1");
            require(n >= r + 1, "t2_1 needs n >= r+1");
            return pi.d(r + 1) >= r && degree_floor(r - 1);
        case RuleTag::t2_2:
            require(r >= 1, "t2_2 needs r >= 1");
            require(n >= 2 * r + 2, "t2_2 needs n >= 2r+2");
            return pi.d(r + 1) >= r && pi.d(2 * r + 2) >= r - 1;
        case RuleTag::t2_3:
            require(r >= 1, "t2_3 needs r >= 1");
            require(n >= r + 1, "t2_3 needs n >= r+1");
            return pi.d(r + 1) >= r - 1 && degree_floor(r - 1);
        case RuleTag::t2_4:
            require(r >= 2, "t2_4 needs r >= 2");
            require(n >= 2 * r + 2, "t2_4 needs n >= 2r+2");
            return pi.d(r - 1) >= r && pi.d(2 * r + 2) >= r - 1;
        case RuleTag::l2_2:
            require(r >= 2, "l2_2 needs r >= 2");
            require(n >= 2 * r, "l2_2 needs n >= 2r");
            return pi.d(r - 1) >= r && pi.d(r + 1) >= r - 1 && degree_floor(r - 2);
        case RuleTag::l2_4:
            require(r >= 5, "l2_4 needs r >= 5");
            require(n >= 2 * r + 2, "l2_4 needs n >= 2r+2");
            return pi.d(r - 4) >= r && pi.sigma() >= sigma_branch_bound(r, n, 2) &&
                   pi.d(2 * r + 2) >= r - 1;
        case RuleTag::l2_5:
            require(r >= 3, "l2_5 needs r >= 3");
            require(n >= 2 * r, "l2_5 needs n >= 2r");
            require(n >= r + 3, "l2_5 references d_{r+3}, needs n >= r+3");
            return pi.d(r - 2) >= r + 1 && pi.d(r + 1) >= r &&
                   pi.d(r) - 1 >= pi.d(r + 3) && degree_floor(r - 3);
        case RuleTag::l3_1:
            require(r >= 4, "l3_1 needs r >= 4");
            require(n >= 2 * r + 2, "l3_1 needs n >= 2r+2");
            return pi.d(r - 2) >= r - 1 && pi.d(r + 1) >= r - 2 &&
                   pi.sigma() >= sigma_branch_bound(r, n, 0) && degree_floor(r - 3);
    }
    throw DomainError("sufficient_condition: unknown rule tag");
}

namespace {

std::vector<uint64_t> adjacency_key(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<uint64_t> key((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0u);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(i, j)) key[static_cast<size_t>(bit) >> 6] |= uint64_t{1} << (bit & 63);
    return key;
}

struct KeyHash {
    size_t operator()(const std::vector<uint64_t>& key) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : key) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace

std::optional<SimpleGraph> edge_excluded_realization(const DegreeSequence& pi, int r,
                                                     const SimpleGraph& G,
                                                     TwoSwitchSearchOptions opts) {
    const int n = G.n();
    if (pi.n() != n) throw DomainError("edge_excluded_realization: size mismatch");
    if (r < 1 || r + 1 > n)
        throw DomainError("edge_excluded_realization: requires 1 <= r and r+1 <= n");
    for (int i = 0; i < n; ++i)
        if (G.degree(i) != pi[i])
            throw DomainError("edge_excluded_realization: vertex " + std::to_string(i) +
                              " does not carry degree d_" + std::to_string(i + 1));
    std::vector<int> top(static_cast<size_t>(r + 1));
    std::iota(top.begin(), top.end(), 0);
    const int clique_edges = r * (r + 1) / 2;
    if (G.induced_edge_count(top) > clique_edges - 1)
        throw DomainError("edge_excluded_realization: top r+1 vertices induce a complete graph");

    const int a = r - 1, b = r; // v_r and v_{r+1}, 0-based

    std::deque<SimpleGraph> queue;
    std::unordered_set<std::vector<uint64_t>, KeyHash> visited;
    queue.push_back(G);
    visited.insert(adjacency_key(G));

    while (!queue.empty()) {
        SimpleGraph cur = std::move(queue.front());
        queue.pop_front();
        if (!cur.has_edge(a, b)) return cur;

        const std::vector<graphcore::Edge> es = cur.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            for (size_t j = i + 1; j < es.size(); ++j) {
                for (int flip = 0; flip < 2; ++flip) {
                    int c = flip ? es[j].v : es[j].u;
                    int d = flip ? es[j].u : es[j].v;
                    auto sw = graphcore::two_switch(cur, es[i].u, es[i].v, c, d);
                    if (!sw) continue;
                    auto key = adjacency_key(*sw.graph);
                    if (visited.contains(key)) continue;
                    if (visited.size() >= opts.max_states) return std::nullopt;
                    visited.insert(std::move(key));
                    queue.push_back(std::move(*sw.graph));
                }
            }
        }
    }
    return std::nullopt; // component exhausted without hit; impossible under the precondition
}

} // namespace gseq::potential
