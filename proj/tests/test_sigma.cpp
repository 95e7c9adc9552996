#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gseq/errors.hpp"
#include "gseq/pattern.hpp"
#include "gseq/potential.hpp"
#include "gseq/sigma.hpp"

using gseq::DomainError;
using namespace gseq::sigma;
using gseq::graphcore::SimpleGraph;
using gseq::graphcore::build;
using gseq::graphcore::degree_sequence;
using gseq::graphcore::parse_pattern;
using gseq::seqcore::DegreeSequence;

namespace {

DegreeSequence seq(std::vector<int> terms) { return DegreeSequence(std::move(terms)); }

SimpleGraph from_spec(const std::string& text) { return build(parse_pattern(text)); }

} // namespace

TEST_CASE("closed forms on the pinned values") {
    CHECK(closed_form_sigma({FamilyTag::thm11, 6}, 48) == 324);
    CHECK(closed_form_sigma({FamilyTag::thm11, 6}, 49) == 330);
    CHECK(closed_form_sigma({FamilyTag::thm11, 7}, 53) == 456);

    CHECK(closed_form_sigma({FamilyTag::c4, 0}, 4) == 10);
    CHECK(closed_form_sigma({FamilyTag::c4, 0}, 5) == 14);
    CHECK(closed_form_sigma({FamilyTag::c4, 0}, 6) == 16);
    CHECK(closed_form_sigma({FamilyTag::c4, 0}, 7) == 20);

    CHECK(closed_form_sigma({FamilyTag::p_matching, 2}, 4) == 8);
    CHECK(closed_form_sigma({FamilyTag::p_matching, 2}, 5) == 10);
    CHECK(closed_form_sigma({FamilyTag::p_matching, 2}, 6) == 12);

    CHECK(closed_form_sigma({FamilyTag::ejl_lower, 3}, 6) == 12);
    CHECK(closed_form_sigma({FamilyTag::ejl_lower, 3}, 7) == 14);

    CHECK(closed_form_sigma({FamilyTag::turan_k3, 0}, 6) == 9);
    CHECK(closed_form_sigma({FamilyTag::turan_k3, 0}, 7) == 12);
}

TEST_CASE("closed forms refuse out-of-range parameters") {
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::thm11, 5}, 48), DomainError);
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::thm11, 6}, 47), DomainError);
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::c4, 0}, 3), DomainError);
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::p_matching, 1}, 8), DomainError);
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::p_matching, 2}, 3), DomainError);
    CHECK_THROWS_AS(closed_form_sigma({FamilyTag::ejl_lower, 2}, 8), DomainError);
}

TEST_CASE("extremal construction pinned degree sequences") {
    SimpleGraph g48 = extremal_construction(6, 48);
    CHECK(g48.n() == 48);
    std::vector<int> want48(3, 47);
    want48.push_back(5);
    want48.insert(want48.end(), 44, 4);
    CHECK(degree_sequence(g48) == seq(want48));

    SimpleGraph g49 = extremal_construction(6, 49);
    CHECK(g49.n() == 49);
    std::vector<int> want49(3, 48);
    want49.push_back(5);
    want49.insert(want49.end(), 44, 4);
    want49.push_back(3);
    CHECK(degree_sequence(g49) == seq(want49));

    CHECK(degree_sequence(extremal_construction(4, 7)) == seq({6, 3, 2, 2, 2, 2, 1}));

    CHECK_THROWS_AS(extremal_construction(3, 10), DomainError);
    CHECK_THROWS_AS(extremal_construction(6, 6), DomainError);
}

TEST_CASE("extremal sequence sigma ties to the closed form") {
    CHECK(extremal_sequence(6, 48).sigma() == 322);
    CHECK(extremal_sequence(6, 49).sigma() == 328);
    CHECK(extremal_sequence(7, 53).sigma() == 454);
    CHECK(extremal_sequence(7, 53).sigma() + 2 == closed_form_sigma({FamilyTag::thm11, 7}, 53));
}

TEST_CASE("template and construction agree across a parameter grid") {
    for (int r = 4; r <= 8; ++r)
        for (int n = r + 1; n <= r + 8; ++n)
            CHECK(extremal_sequence(r, n) == degree_sequence(extremal_construction(r, n)));
    for (int r = 6; r <= 8; ++r)
        for (int n = 5 * r + 18; n <= 5 * r + 20; ++n) {
            CHECK(extremal_sequence(r, n) == degree_sequence(extremal_construction(r, n)));
            CHECK(extremal_sequence(r, n).sigma() + 2 ==
                  closed_form_sigma({FamilyTag::thm11, r}, n));
        }
}

TEST_CASE("the closed form is monotone nondecreasing in n on the grid") {
    for (int r = 6; r <= 10; ++r) {
        long long prev = closed_form_sigma({FamilyTag::thm11, r}, 5 * r + 18);
        for (int n = 5 * r + 19; n <= 5 * r + 24; ++n) {
            long long cur = closed_form_sigma({FamilyTag::thm11, r}, n);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("the construction is the unique realization of its sequence (small scale)") {
    for (int r = 4; r <= 5; ++r)
        for (int n = r + 1; n <= 8; ++n) {
            SimpleGraph g = extremal_construction(r, n);
            uint64_t code = g.canonical_code();
            auto rs = gseq::potential::all_realizations(extremal_sequence(r, n));
            REQUIRE(!rs.empty());
            for (const SimpleGraph& h : rs) CHECK(h.canonical_code() == code);
        }
}

TEST_CASE("sigma_bruteforce pinned examples") {
    SigmaResult c4 = sigma_bruteforce(from_spec("C4"), 4, true);
    CHECK(c4.value == 10);
    REQUIRE(c4.certificate.has_value());
    CHECK(*c4.certificate == seq({3, 2, 2, 1}));

    SigmaResult two_k2 = sigma_bruteforce(from_spec("U(K2,K2)"), 4, true);
    CHECK(two_k2.value == 8);
    REQUIRE(two_k2.certificate.has_value());
    CHECK(*two_k2.certificate == seq({3, 1, 1, 1}));

    SigmaResult k3 = sigma_bruteforce(from_spec("K3"), 6, false);
    CHECK(k3.value == 12);
    REQUIRE(k3.certificate.has_value());
    CHECK(*k3.certificate == seq({5, 1, 1, 1, 1, 1}));
}

TEST_CASE("sigma_bruteforce certificates satisfy the result invariants") {
    for (const char* pat : {"C4", "K3", "U(K2,K2)", "P2"}) {
        SimpleGraph H = from_spec(pat);
        SigmaResult res = sigma_bruteforce(H, 5, true);
        CHECK(res.value % 2 == 0);
        if (res.certificate) {
            CHECK(res.value == res.certificate->sigma() + 2);
            CHECK(gseq::seqcore::is_graphical(*res.certificate));
            CHECK_FALSE(gseq::potential::is_potentially(*res.certificate, H).has_value());
        }
    }
}

TEST_CASE("sigma_bruteforce empty-certificate convention") {
    // every graphical sequence trivially realizes a single vertex
    SigmaResult res = sigma_bruteforce(from_spec("K1"), 3, true);
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.value == 0); // the empty sequence (0,0,0) is the minimum

    SigmaResult nz = sigma_bruteforce(from_spec("K1"), 3, false);
    CHECK_FALSE(nz.certificate.has_value());
    CHECK(nz.value == 4); // (2,1,1) is the least no-zero graphical sum
}

TEST_CASE("sigma_bruteforce guards") {
    CHECK_THROWS_AS(sigma_bruteforce(from_spec("K3"), 9, true), DomainError);
    CHECK_THROWS_AS(sigma_bruteforce(from_spec("K4"), 3, true), DomainError);
    SigmaOptions opts;
    opts.override_limit = true;
    opts.max_n = 8;
    CHECK(sigma_bruteforce(from_spec("K3"), 9, true, opts).value ==
          closed_form_sigma({FamilyTag::ejl_lower, 3}, 9));
}

TEST_CASE("sigma_bruteforce is schedule-independent") {
    SigmaOptions one;
    one.threads = 1;
    SigmaOptions four;
    four.threads = 4;
    SigmaResult a = sigma_bruteforce(from_spec("C4"), 6, true, one);
    SigmaResult b = sigma_bruteforce(from_spec("C4"), 6, true, four);
    CHECK(a.value == b.value);
    REQUIRE(a.certificate.has_value());
    REQUIRE(b.certificate.has_value());
    CHECK(*a.certificate == *b.certificate);
}

TEST_CASE("EJL threshold with zero terms allowed, reported not asserted") {
    SigmaResult with_zeros = sigma_bruteforce(from_spec("K3"), 6, true);
    CHECK(with_zeros.value % 2 == 0);
    MESSAGE("sigma(K3, 6) allowing zero terms = ", with_zeros.value, " (no-zero value is 12)");
    if (with_zeros.certificate)
        MESSAGE("certificate: ", with_zeros.certificate->to_string());
}

TEST_CASE("verify_theorem passes on the pinned instance") {
    TheoremReport rep = verify_theorem(6, 48, from_spec("U(K3,P3)"));
    CHECK(rep.sequence_matches_construction);
    CHECK(rep.sigma_matches);
    CHECK(rep.pattern_absent);
    CHECK(rep.certificate_sigma == 322);
    CHECK(rep.formula_value == 324);
    CHECK_FALSE(rep.odd_branch);
    CHECK(rep.all_pass());
    CHECK(rep.to_text().find("overall: PASS") != std::string::npos);
}

TEST_CASE("verify_theorem refusals") {
    CHECK_THROWS_AS(verify_theorem(6, 48, from_spec("U(C3,C4)")), DomainError);
    CHECK_THROWS_AS(verify_theorem(6, 40, from_spec("U(K3,P3)")), DomainError);
    VerifyOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(verify_theorem(6, 48, from_spec("U(K3,P3)"), tiny), DomainError);
}
