#ifndef GSEQ_GRAPH_HPP
#define GSEQ_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gseq/bitrow.hpp"
#include "gseq/seqcore.hpp"

namespace gseq::graphcore {

struct Edge {
    int u, v; // normalized u < v
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

// Labeled undirected simple graph on vertices 0..n-1, adjacency kept as one
// bit row per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    void add_edge(int u, int v);    // throws DomainError on loops/range/duplicates
    void remove_edge(int u, int v); // throws DomainError if absent

    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    const BitRow& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    std::vector<Edge> edges() const; // sorted lexicographically

    // Subgraph induced by the given vertices (relabeled 0..k-1 in list order).
    SimpleGraph induced(std::span<const int> vertices) const;
    int induced_edge_count(std::span<const int> vertices) const;

    bool operator==(const SimpleGraph&) const = default;

    // Smallest upper-triangle adjacency encoding over all vertex relabelings;
    // equal codes mean isomorphic. Exhaustive over permutations, so limited
    // to n <= 10 (throws DomainError beyond).
    uint64_t canonical_code() const;

    // "n m" header then one "u v" line per edge.
    std::string to_text() const;
    static SimpleGraph from_text(const std::string& text);

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<BitRow> adj_;
};

seqcore::DegreeSequence degree_sequence(const SimpleGraph& g);

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
// Disjoint union plus every edge between the two vertex sets.
SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b);

// Injective map from pattern vertices to host vertices carrying every
// pattern edge onto a host edge.
struct Embedding {
    std::vector<int> map; // map[pattern vertex] = host vertex
};

enum class SearchStatus { found, not_found, budget_exhausted };

struct ContainsResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<Embedding> embedding;
    uint64_t nodes = 0;
};

// Subgraph (not induced) containment. Pattern vertices are matched in order
// of decreasing pattern degree; host candidates are tried in order of
// decreasing host degree; candidates are pruned by host-degree feasibility
// and adjacency with already-matched pattern neighbors. The returned
// embedding is the first in this fixed search order.
std::optional<Embedding> contains(const SimpleGraph& host, const SimpleGraph& pattern);

// Same search with a node budget; status reports exhaustion instead of
// answering when the budget runs out.
ContainsResult contains_budgeted(const SimpleGraph& host, const SimpleGraph& pattern,
                                 uint64_t max_nodes);

// Checks that emb maps pattern injectively into host carrying all edges.
bool embedding_valid(const SimpleGraph& host, const SimpleGraph& pattern,
                     const Embedding& emb);

enum class TwoSwitchReject {
    none,
    missing_edge,          // ab or cd is not an edge
    overlapping_endpoints, // a, b, c, d not pairwise distinct
    replacement_present,   // ac or bd already an edge
};

struct TwoSwitchResult {
    std::optional<SimpleGraph> graph;
    TwoSwitchReject reject = TwoSwitchReject::none;
    explicit operator bool() const { return graph.has_value(); }
};

const char* to_string(TwoSwitchReject r);

// Replaces edges ab, cd with ac, bd (endpoint order matters: it decides
// which replacement pair is formed). All degrees are preserved. On a
// precondition violation the result carries the reject reason instead.
TwoSwitchResult two_switch(const SimpleGraph& g, int a, int b, int c, int d);

} // namespace gseq::graphcore

#endif
