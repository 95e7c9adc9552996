#ifndef GSEQ_SIGMA_HPP
#define GSEQ_SIGMA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gseq/graph.hpp"
#include "gseq/seqcore.hpp"

namespace gseq::sigma {

enum class FamilyTag {
    thm11,      // K_{r+1} minus a K_3 u P_3 -like graph; parameter r
    ejl_lower,  // K_k lower bound (k-2)(2n-k+1)+2; parameter k
    p_matching, // pK_2: (p-1)(2n-2)+2; parameter p
    c4,         // 2*floor((3n-1)/2)
    turan_k3,   // floor(n^2/4), an edge count rather than a degree sum
};

const char* to_string(FamilyTag tag);
std::optional<FamilyTag> family_from_string(const std::string& name);

struct FormulaFamily {
    FamilyTag tag;
    int param = 0; // r / k / p where applicable
};

// Exact closed-form value; throws DomainError outside each formula's stated
// validity range (thm11: r >= 6 and n >= 5r+18; c4: n >= 4; p_matching:
// p >= 2 and n >= 2p; ejl_lower: k >= 3 and n >= k).
long long closed_form_sigma(FormulaFamily family, long long n);

// The threshold certificate graph: K_{r-3} joined to a disjoint collection
// of K_2's plus one P_2 (and one K_1 when n-r is odd). Requires r >= 4 and
// n >= r+1.
graphcore::SimpleGraph extremal_construction(int r, int n);

// The degree sequence of that construction, emitted directly from its
// closed-form template: ((n-1)^{r-3}, (r-1)^1, (r-2)^{n-r+2}) for even n-r,
// ((n-1)^{r-3}, (r-1)^1, (r-2)^{n-r+1}, (r-3)^1) for odd n-r.
seqcore::DegreeSequence extremal_sequence(int r, int n);

struct SigmaOptions {
    int max_n = 8;               // sweep size guard
    bool override_limit = false;
    int threads = 1;             // workers for the per-bucket potential checks
    std::function<void(const std::string&)> progress; // diagnostic lines
};

// The minimum even degree sum forcing every graphical sequence of length n
// to be potentially H-graphic, computed by exhaustive sweep, plus the
// maximum-sigma certificate sequence that is not potentially H-graphic.
// When every graphical sequence is potentially H-graphic the value is the
// minimum even sigma among them and the certificate is empty.
struct SigmaResult {
    long long value = 0;
    std::optional<seqcore::DegreeSequence> certificate;
    bool allow_zeros = true;
};

SigmaResult sigma_bruteforce(const graphcore::SimpleGraph& H, int n, bool allow_zeros,
                             SigmaOptions opts = {});

struct VerifyOptions {
    uint64_t node_budget = 100'000'000; // containment search nodes
    std::function<void(const std::string&)> progress;
};

// Consistency report for the closed form against its extremal certificate:
// (a) template sequence matches the constructed graph, (b) certificate sigma
// is the closed form minus 2, (c) the construction contains no
// K_{r+1} - U, (d) which parity branch applied. Requires validate_U(U, r)
// and n >= 5r+18; throws DomainError when the containment budget runs out.
struct TheoremReport {
    int r = 0;
    int n = 0;
    bool odd_branch = false;
    bool sequence_matches_construction = false;
    long long certificate_sigma = 0;
    long long formula_value = 0;
    bool sigma_matches = false;
    bool pattern_absent = false;
    uint64_t containment_nodes = 0;
    double seconds = 0.0;

    bool all_pass() const {
        return sequence_matches_construction && sigma_matches && pattern_absent;
    }
    std::string to_text() const;
};

TheoremReport verify_theorem(int r, int n, const graphcore::SimpleGraph& U,
                             VerifyOptions opts = {});

} // namespace gseq::sigma

#endif
