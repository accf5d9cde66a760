#include "dbx/inverse.hpp"

#include "../fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace dbx;

TEST_CASE("admissibility") {
    auto spec = [](const char* m, const char* a) { return ProfileSpec{PeriodicSeq::parse(m), PeriodicSeq::parse(a)}; };
    CHECK(check_admissible(spec("0(01)", "1(110)")).is_proven());
    CHECK(check_admissible(spec("(0)", "(1)")).is_proven());
    CHECK(check_admissible(spec("(10)", "(10)")).kind == Verdict::Kind::RefutedWitness);
    // alpha must start with 1.
    CHECK(check_admissible(spec("(01)", "0(110)")).kind == Verdict::Kind::RefutedWitness);
    // The shift 1^inf of 10(1) exceeds it.
    CHECK(check_admissible(spec("(01)", "10(1)")).kind == Verdict::Kind::RefutedWitness);
}

TEST_CASE("the C profile is degenerate") {
    SolveResult r = solve_base({PeriodicSeq::zeros(), PeriodicSeq::ones()});
    CHECK(r.on_curve_c);
    CHECK(r.roots.empty());
}

TEST_CASE("golden ratio from its profile") {
    SolveResult r = solve_base({PeriodicSeq::parse("(01)"), PeriodicSeq::parse("(10)")}, 1e-12);
    REQUIRE(r.roots.size() == 1);
    const SolvedBase& s = r.roots[0];
    double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::fabs(s.q0_approx - phi) < 1e-12);
    CHECK(std::fabs(s.q1_approx - phi) < 1e-12);
    CHECK(s.exact);
    CHECK(s.residual_alpha == 0);
    CHECK(s.residual_mu == 0);
    ExactScalar q = s.base.q0();
    CHECK(compare(q * q, q + ExactScalar(1)) == Ordering::Equal);
    CHECK(compare(s.base.q0(), s.base.q1()) == Ordering::Equal);
}

TEST_CASE("rational solutions are demoted") {
    SolveResult r = solve_base({PeriodicSeq::parse("0(01)"), PeriodicSeq::parse("(10)")});
    REQUIRE(r.roots.size() == 1);
    REQUIRE(r.roots[0].base.q0().as_rational());
    CHECK(*r.roots[0].base.q0().as_rational() == Rational(3, 2));
    CHECK(*r.roots[0].base.q1().as_rational() == 2);
}

TEST_CASE("case XII pair") {
    SolveResult r = solve_base(fixtures::spec(fixtures::twelve[11]));
    REQUIRE(!r.roots.empty());
    CHECK(r.roots[0].reproduces);
    CHECK(classify_case(r.roots[0].forward).label == CaseLabel::XII);
}

TEST_CASE("inadmissible input is rejected") {
    CHECK_THROWS_AS(solve_base({PeriodicSeq::parse("(10)"), PeriodicSeq::parse("(10)")}), std::invalid_argument);
}
