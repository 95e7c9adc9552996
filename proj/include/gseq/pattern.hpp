#ifndef GSEQ_PATTERN_HPP
#define GSEQ_PATTERN_HPP

#include <memory>
#include <string>
#include <vector>

#include "gseq/graph.hpp"

namespace gseq::graphcore {

// Expression tree naming a graph-family construction.
//
// Conventions: Path(k) is the path with k edges on k+1 vertices, Cycle(k)
// needs k >= 3, Complete(k) needs k >= 1. CompleteMinus(m, H) removes the
// edges of H placed on the first |V(H)| vertices of K_m. Friendship(k) is k
// triangles sharing one vertex; GenFriendship(t, r, k) is k copies of K_t
// sharing a common r-set. Z4 is CompleteMinus(4, Path(2)).
struct PatternSpec {
    enum class Kind {
        single_vertex,
        complete,
        cycle,
        path,
        pattern_union,
        pattern_join,
        complete_minus,
        friendship,
        gen_friendship,
        z4,
    };

    Kind kind = Kind::single_vertex;
    int k = 0;         // complete/cycle/path/friendship size
    int t = 0, r = 0;  // gen_friendship parameters (k above is the copy count)
    int m = 0;         // complete_minus host size
    std::vector<PatternSpec> children; // union members, join pair, minus inner

    static PatternSpec SingleVertex();
    static PatternSpec Complete(int k);
    static PatternSpec Cycle(int k);
    static PatternSpec Path(int k);
    static PatternSpec Union(std::vector<PatternSpec> parts);
    static PatternSpec Join(PatternSpec a, PatternSpec b);
    static PatternSpec CompleteMinus(int m, PatternSpec inner);
    static PatternSpec Friendship(int k);
    static PatternSpec GenFriendship(int t, int r, int k);
    static PatternSpec Z4();

    // Canonical text form in the CLI grammar.
    std::string to_string() const;
};

// Builds the labeled graph named by the spec. Throws DomainError for a
// malformed spec (Cycle(2), an inner graph too large for CompleteMinus, ...).
SimpleGraph build(const PatternSpec& spec);

// Parses the pattern grammar: K7, C5, P3, Z4, F2, F(4,1,3), U(a,b,...),
// J(a,b), M(m,inner). Whitespace- and case-insensitive. Throws ParseError.
PatternSpec parse_pattern(const std::string& text);

// Hypotheses on the removed graph U for the sigma threshold family with
// parameter r: U has k vertices with 7 <= k <= r+1, at least 6 edges,
// contains K_3 u P_3, contains no C_4 and no Z_4. Requires r >= 6.
bool validate_U(const SimpleGraph& U, int r);

} // namespace gseq::graphcore

#endif
