#ifndef GSEQ_SEQCORE_HPP
#define GSEQ_SEQCORE_HPP

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace gseq::seqcore {

// A nonincreasing integer sequence of prospective vertex degrees. The
// constructor sorts its input, so a DegreeSequence is always nonincreasing.
// Graphical sequences have only nonnegative terms; negative terms can appear
// transiently as the image of layoff() on a non-graphical input and are never
// graphical themselves.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> terms);

    int n() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    // 0-based access.
    int operator[](int i) const { return terms_[static_cast<size_t>(i)]; }
    // 1-based access (the i-th largest degree), convenient next to the usual
    // d_1 >= d_2 >= ... notation of the hypothesis predicates.
    int d(int i) const { return terms_[static_cast<size_t>(i - 1)]; }

    long long sigma() const;
    int min_term() const;
    bool nonnegative() const { return empty() || min_term() >= 0; }

    const std::vector<int>& terms() const { return terms_; }

    auto operator<=>(const DegreeSequence&) const = default;

    // "5,4,4,3,3,3"
    std::string to_string() const;

    // Parses the comma-separated text form. Terms must be nonnegative
    // integers; the result is sorted nonincreasing. If was_unsorted is
    // non-null it reports whether the input needed sorting.
    static DegreeSequence parse(const std::string& text,
                                bool* was_unsorted = nullptr);

private:
    std::vector<int> terms_;
};

// Erdos-Gallai test: true iff sigma is even and for every t in 1..n-1,
// sum_{i<=t} d_i <= t(t-1) + sum_{j>t} min(t, d_j). Sequences with a negative
// term are never graphical. Total on all DegreeSequence values.
bool is_graphical(const DegreeSequence& pi);

// The residual sequence obtained by laying off d_k (k is 1-based).
// Two branches: if d_k >= k, the first d_k+1 terms other than position k are
// decremented; otherwise the first d_k terms are decremented. Position k is
// removed and the result re-sorted nonincreasing.
// Throws DomainError if k is out of range, or if d_k >= k with d_k + 1 > n
// (the branch would reference terms past the end; impossible when
// d_1 <= n-1).
DegreeSequence layoff(const DegreeSequence& pi, int k);

// Decides graphicality by repeated laying off (k = n each step) down to a
// trivial base case. Independent of the Erdos-Gallai route; the two must
// agree on every input.
bool is_graphical_recursive(const DegreeSequence& pi);

// Visits every graphical sequence of length n with d_1 <= n-1, min term
// >= min_term and sigma in [sigma_min, sigma_max], in lexicographically
// decreasing order, each exactly once. The visitor returns false to stop
// early. Throws DomainError on an invalid parameter range.
void enumerate_graphical(int n, long long sigma_min, long long sigma_max,
                         const std::function<bool(const DegreeSequence&)>& visit,
                         int min_term = 0);

// Convenience form collecting the whole stream.
std::vector<DegreeSequence> collect_graphical(int n, long long sigma_min,
                                              long long sigma_max,
                                              int min_term = 0);

} // namespace gseq::seqcore

#endif
