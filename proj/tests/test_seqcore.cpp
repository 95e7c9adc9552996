#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gseq/errors.hpp"
#include "gseq/seqcore.hpp"
#include "oracles.hpp"

using gseq::DomainError;
using gseq::ParseError;
using namespace gseq::seqcore;

namespace {

DegreeSequence seq(std::vector<int> terms) { return DegreeSequence(std::move(terms)); }

} // namespace

TEST_CASE("is_graphical on the pinned examples") {
    CHECK(is_graphical(seq({3, 3, 3, 3})));
    CHECK_FALSE(is_graphical(seq({3, 3, 1, 1})));
    CHECK(is_graphical(seq({0, 0, 0})));

    // confirmed against the exhaustive graph-enumeration oracle
    REQUIRE(oracles::naive_is_graphical({5, 4, 4, 3, 3, 3}));
    CHECK(is_graphical(seq({5, 4, 4, 3, 3, 3})));
}

TEST_CASE("is_graphical rejects odd sums and negative terms") {
    CHECK_FALSE(is_graphical(seq({1, 1, 1})));
    CHECK_FALSE(is_graphical(seq({2, 1})));
    CHECK(is_graphical(DegreeSequence{}));

    DegreeSequence with_negative = layoff(seq({1, 0}), 1); // (-1)
    CHECK(with_negative.min_term() < 0);
    CHECK_FALSE(is_graphical(with_negative));
}

TEST_CASE("layoff pinned examples") {
    CHECK(layoff(seq({3, 3, 3, 3}), 4) == seq({2, 2, 2}));
    CHECK(layoff(seq({4, 3, 3, 2, 2}), 1) == seq({2, 2, 1, 1}));
    CHECK(layoff(seq({1, 1}), 2) == seq({0}));
}

TEST_CASE("layoff rejects out-of-range k") {
    CHECK_THROWS_AS(layoff(seq({2, 2, 2}), 0), DomainError);
    CHECK_THROWS_AS(layoff(seq({2, 2, 2}), 4), DomainError);
    // d_k exceeding the available terms is undefined as well
    CHECK_THROWS_AS(layoff(seq({5, 1}), 1), DomainError);
}

TEST_CASE("layoff structural invariants over small sequences") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& terms : oracles::all_nonincreasing(n, n - 1)) {
            DegreeSequence pi = seq(terms);
            for (int k = 1; k <= n; ++k) {
                DegreeSequence res = layoff(pi, k);
                CHECK(res.n() == n - 1);
                CHECK(res.sigma() == pi.sigma() - 2 * pi.d(k));
                CHECK(std::is_sorted(res.terms().begin(), res.terms().end(),
                                     std::greater<int>()));
            }
        }
    }
}

TEST_CASE("laying off preserves graphicality status (even sums, n <= 6)") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& terms : oracles::all_nonincreasing(n, n - 1)) {
            DegreeSequence pi = seq(terms);
            if (pi.sigma() % 2 != 0) continue;
            bool expect = is_graphical(pi);
            for (int k = 1; k <= n; ++k) CHECK(is_graphical(layoff(pi, k)) == expect);
        }
    }
}

TEST_CASE("is_graphical_recursive pinned examples") {
    CHECK(is_graphical_recursive(seq({2, 2, 2})));
    CHECK_FALSE(is_graphical_recursive(seq({3, 3, 1, 1})));
    CHECK(is_graphical_recursive(seq({0, 0})));
}

TEST_CASE("the two graphicality routes agree exhaustively (n <= 6)") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& terms : oracles::all_nonincreasing(n, n - 1)) {
            DegreeSequence pi = seq(terms);
            CHECK(is_graphical(pi) == is_graphical_recursive(pi));
        }
}

TEST_CASE("enumerate_graphical pinned examples") {
    auto n3 = collect_graphical(3, 0, 6);
    REQUIRE(n3.size() == 4);
    CHECK(n3[0] == seq({2, 2, 2}));
    CHECK(n3[1] == seq({2, 1, 1}));
    CHECK(n3[2] == seq({1, 1, 0}));
    CHECK(n3[3] == seq({0, 0, 0}));

    auto n2 = collect_graphical(2, 0, 2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0] == seq({1, 1}));
    CHECK(n2[1] == seq({0, 0}));

    auto n4 = collect_graphical(4, 12, 12);
    REQUIRE(n4.size() == 1);
    CHECK(n4[0] == seq({3, 3, 3, 3}));
}

TEST_CASE("enumerate_graphical matches the labeled-graph oracle (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        auto expect = oracles::naive_degree_sequences(n);
        auto got = collect_graphical(n, 0, static_cast<long long>(n) * (n - 1));
        REQUIRE(got.size() == expect.size());
        for (const auto& pi : got) CHECK(expect.contains(pi.terms()));
    }
}

TEST_CASE("enumerate_graphical respects sigma bounds, min_term and order") {
    auto mid = collect_graphical(4, 4, 6);
    for (const auto& pi : mid) {
        CHECK(pi.sigma() >= 4);
        CHECK(pi.sigma() <= 6);
    }
    for (size_t i = 0; i + 1 < mid.size(); ++i) CHECK(mid[i] > mid[i + 1]);

    auto no_zero = collect_graphical(4, 0, 12, 1);
    for (const auto& pi : no_zero) CHECK(pi.min_term() >= 1);

    CHECK_THROWS_AS(enumerate_graphical(0, 0, 0, [](const DegreeSequence&) { return true; }),
                    DomainError);
    CHECK_THROWS_AS(enumerate_graphical(3, 4, 2, [](const DegreeSequence&) { return true; }),
                    DomainError);
    CHECK_THROWS_AS(enumerate_graphical(3, 0, 7, [](const DegreeSequence&) { return true; }),
                    DomainError);
}

TEST_CASE("enumeration stops when the visitor declines") {
    int calls = 0;
    enumerate_graphical(5, 0, 20, [&](const DegreeSequence&) { return ++calls < 3; });
    CHECK(calls == 3);
}

TEST_CASE("sequence text form round-trips") {
    bool unsorted = false;
    DegreeSequence pi = DegreeSequence::parse("5,4,4,3,3,3", &unsorted);
    CHECK_FALSE(unsorted);
    CHECK(pi == seq({5, 4, 4, 3, 3, 3}));
    CHECK(pi.to_string() == "5,4,4,3,3,3");

    DegreeSequence shuffled = DegreeSequence::parse("3, 5, 4, 3, 4, 3", &unsorted);
    CHECK(unsorted);
    CHECK(shuffled == pi);

    CHECK_THROWS_AS(DegreeSequence::parse("", nullptr), ParseError);
    CHECK_THROWS_AS(DegreeSequence::parse("3,,1", nullptr), ParseError);
    CHECK_THROWS_AS(DegreeSequence::parse("3,-1", nullptr), ParseError);
    CHECK_THROWS_AS(DegreeSequence::parse("3,x", nullptr), ParseError);
}

TEST_CASE("sigma and accessors") {
    DegreeSequence pi = seq({4, 3, 1});
    CHECK(pi.sigma() == 8);
    CHECK(pi.d(1) == 4);
    CHECK(pi[2] == 1);
    CHECK(pi.min_term() == 1);
}
