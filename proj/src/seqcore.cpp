#include "gseq/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gseq/errors.hpp"

namespace gseq::seqcore {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    std::stable_sort(terms_.begin(), terms_.end(), std::greater<int>());
}

long long DegreeSequence::sigma() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

int DegreeSequence::min_term() const {
    return terms_.empty() ? 0 : terms_.back();
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << ',';
        os << terms_[i];
    }
    return os.str();
}

DegreeSequence DegreeSequence::parse(const std::string& text, bool* was_unsorted) {
    std::vector<int> terms;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw ParseError("empty term in sequence '" + text + "'");
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad term '" + token + "' in sequence");
        }
        if (pos != token.size()) throw ParseError("bad term '" + token + "' in sequence");
        if (value < 0) throw ParseError("negative term '" + token + "' in sequence");
        terms.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    bool sorted = std::is_sorted(terms.begin(), terms.end(), std::greater<int>());
    if (was_unsorted) *was_unsorted = !sorted;
    return DegreeSequence(std::move(terms));
}

bool is_graphical(const DegreeSequence& pi) {
    const int n = pi.n();
    if (n == 0) return true;
    if (pi.min_term() < 0) return false;
    if (pi.sigma() % 2 != 0) return false;

    long long head = 0;
    for (int t = 1; t <= n - 1; ++t) {
        head += pi.d(t);
        long long bound = static_cast<long long>(t) * (t - 1);
        for (int j = t + 1; j <= n; ++j) bound += std::min(t, pi.d(j));
        if (head > bound) return false;
    }
    return true;
}

DegreeSequence layoff(const DegreeSequence& pi, int k) {
    const int n = pi.n();
    if (k < 1 || k > n) throw DomainError("layoff: k out of range");
    const int dk = pi.d(k);

    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(n) - 1);
    if (dk >= k) {
        if (dk + 1 > n)
            throw DomainError("layoff: d_k exceeds the available terms");
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            rest.push_back(i <= dk + 1 ? pi.d(i) - 1 : pi.d(i));
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            rest.push_back(i <= dk ? pi.d(i) - 1 : pi.d(i));
        }
    }
    return DegreeSequence(std::move(rest));
}

bool is_graphical_recursive(const DegreeSequence& pi) {
    DegreeSequence cur = pi;
    while (true) {
        const int n = cur.n();
        if (n == 0) return true;
        if (cur.min_term() < 0) return false;
        if (cur[0] == 0) return true;      // all zeros
        if (cur[0] > n - 1) return false;  // no simple graph has such a degree
        cur = layoff(cur, n);
    }
}

namespace {

struct Enumerator {
    int n;
    long long sigma_min, sigma_max;
    int min_term;
    const std::function<bool(const DegreeSequence&)>& visit;
    std::vector<int> terms;

    // Returns false once the visitor has asked to stop.
    bool descend(int pos, int prev, long long sum) {
        if (pos == n) {
            if (sum < sigma_min) return true;
            DegreeSequence pi(terms);
            if (!is_graphical(pi)) return true;
            return visit(pi);
        }
        int remaining = n - pos;
        for (int v = prev; v >= min_term; --v) {
            long long s = sum + v;
            if (s > sigma_max) continue;                            // v too large
            if (s + static_cast<long long>(v) * (remaining - 1) < sigma_min)
                break;                                              // all smaller v fail too
            terms[static_cast<size_t>(pos)] = v;
            if (!descend(pos + 1, v, s)) return false;
        }
        return true;
    }
};

} // namespace

void enumerate_graphical(int n, long long sigma_min, long long sigma_max,
                         const std::function<bool(const DegreeSequence&)>& visit,
                         int min_term) {
    if (n < 1) throw DomainError("enumerate_graphical: n must be >= 1");
    const long long cap = static_cast<long long>(n) * (n - 1);
    if (sigma_min < 0 || sigma_min > sigma_max || sigma_max > cap)
        throw DomainError("enumerate_graphical: sigma range must satisfy 0 <= min <= max <= n(n-1)");
    if (min_term < 0) throw DomainError("enumerate_graphical: min_term must be >= 0");

    Enumerator e{n, sigma_min, sigma_max, min_term, visit, std::vector<int>(static_cast<size_t>(n), 0)};
    e.descend(0, n - 1, 0);
}

std::vector<DegreeSequence> collect_graphical(int n, long long sigma_min,
                                              long long sigma_max, int min_term) {
    std::vector<DegreeSequence> out;
    enumerate_graphical(
        n, sigma_min, sigma_max,
        [&](const DegreeSequence& pi) {
            out.push_back(pi);
            return true;
        },
        min_term);
    return out;
}

} // namespace gseq::seqcore
