#ifndef GSEQ_POTENTIAL_HPP
#define GSEQ_POTENTIAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gseq/graph.hpp"
#include "gseq/seqcore.hpp"

namespace gseq::potential {

struct RealizeOptions {
    int max_n = 10;            // refusal guard against runaway enumeration
    bool override_limit = false;
};

// Visits every labeled simple graph on n vertices in which vertex i has
// degree d_i (degrees pre-assigned in nonincreasing order), in a fixed
// deterministic order. The visitor returns false to stop. Throws DomainError
// if pi is not graphical or n exceeds the configured limit.
void realizations(const seqcore::DegreeSequence& pi,
                  const std::function<bool(const graphcore::SimpleGraph&)>& visit,
                  RealizeOptions opts = {});

std::vector<graphcore::SimpleGraph> all_realizations(const seqcore::DegreeSequence& pi,
                                                     RealizeOptions opts = {});

// A realization of pi together with an embedding of the pattern into it.
// In the pruned search the embedded pattern occupies positions whose degree
// multiset equals the top |V(H)| values of pi.
struct PotentialWitness {
    graphcore::SimpleGraph realization;
    graphcore::Embedding embedding;
};

enum class PotentialMode {
    pruned,     // pattern fixed on top-degree positions, then completed
    exhaustive, // scan all realizations; debug oracle, limited by RealizeOptions
};

// Decides whether some realization of pi contains H as a subgraph and
// returns a witness if so. Requires is_graphical(pi) and |V(H)| <= n.
std::optional<PotentialWitness> is_potentially(const seqcore::DegreeSequence& pi,
                                               const graphcore::SimpleGraph& H,
                                               PotentialMode mode = PotentialMode::pruned,
                                               RealizeOptions opts = {});

// True iff some realization has r+1 vertices carrying the top r+1 degrees
// that induce a complete graph. Requires is_graphical(pi) and n >= r+1.
bool is_potentially_clique_top(const seqcore::DegreeSequence& pi, int r);

enum class RuleTag { t2_1, t2_2, t2_3, t2_4, l2_2, l2_4, l2_5, l3_1 };

const char* to_string(RuleTag tag);
std::optional<RuleTag> rule_tag_from_string(const std::string& name);

struct SufficientRule {
    RuleTag tag;
    int r;
};

// Evaluates the hypotheses of the named sufficient condition exactly as
// stated: indexed degree bounds, and for l2_4/l3_1 the parity-dependent
// sigma lower bound. Conditions on the (n, r) ranges are preconditions and
// violations are refusals (DomainError), not false. Requires
// is_graphical(pi).
bool sufficient_condition(const seqcore::DegreeSequence& pi, SufficientRule rule);

struct TwoSwitchSearchOptions {
    uint64_t max_states = 1'000'000; // visited-state cap for the BFS
};

// Given a realization G of pi with vertex i carrying degree d_i and with
// epsilon(G[v_1..v_{r+1}]) <= epsilon(K_{r+1}) - 1, finds a realization with
// the same vertex-degree assignment in which v_r v_{r+1} is not an edge, by
// breadth-first search over 2-switches from G. Returns nullopt only when the
// state cap is exhausted, which callers treat as a property violation.
// Throws DomainError on precondition violations.
std::optional<graphcore::SimpleGraph> edge_excluded_realization(
    const seqcore::DegreeSequence& pi, int r, const graphcore::SimpleGraph& G,
    TwoSwitchSearchOptions opts = {});

} // namespace gseq::potential

#endif
