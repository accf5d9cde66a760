#include "dbx/base_classify.hpp"

#include "../fixtures.hpp"

#include <doctest.h>

using namespace dbx;

TEST_CASE("labels round-trip") {
    for (const char* s : {"C", "I", "IV", "IX", "XII"}) CHECK(to_string(parse_case_label(s)) == s);
    CHECK_THROWS_AS(parse_case_label("XIII"), ParseError);
}

TEST_CASE("the twelve pairs classify to their cases") {
    for (const auto* set : {&fixtures::twelve, &fixtures::extra})
        for (const auto& p : *set) {
            auto s = fixtures::spec(p);
            CHECK_MESSAGE(classify_pair(s.mu, s.alpha) == p.expected, p.name);
        }
}

TEST_CASE("profiles of known bases") {
    DoubleBase golden(ExactScalar::parse("phi"), ExactScalar::parse("phi"));
    auto c = classify_case(profile(golden, 100));
    CHECK(c.label == CaseLabel::IX);
    CHECK(c.verdict.is_proven());

    auto onc = classify_case(profile(DoubleBase(2, 2), 100));
    CHECK(onc.label == CaseLabel::C);

    auto vi = classify_case(profile(DoubleBase(Rational(3, 2), 2), 100));
    CHECK(vi.label == CaseLabel::VI);

    // Below the golden ratio only a witness can settle the case.
    auto small = classify_case(profile(DoubleBase(Rational(3, 2), Rational(3, 2)), 100));
    CHECK(small.label == CaseLabel::XII);
    CHECK(small.verdict.kind == Verdict::Kind::RefutedWitness);

    CHECK_THROWS_AS(profile(DoubleBase(3, 3), 10), DomainError);
}

TEST_CASE("membership of the base in U, closure of U and V") {
    auto m = base_membership(CaseLabel::I);
    CHECK((m.in_U && m.in_closure_U && m.in_V));
    m = base_membership(CaseLabel::VIII);
    CHECK((!m.in_U && m.in_closure_U && m.in_V));
    m = base_membership(CaseLabel::IX);
    CHECK((!m.in_U && !m.in_closure_U && m.in_V));
    m = base_membership(CaseLabel::X);
    CHECK((!m.in_U && !m.in_closure_U && !m.in_V));
}

TEST_CASE("auxiliary profiles of cases X and XI") {
    auto xa = fixtures::spec(fixtures::extra[5]), xb = fixtures::spec(fixtures::extra[6]);
    AuxProfile a = aux_profile(xa.mu, xa.alpha, CaseLabel::XI);
    CHECK(a.subcase == Subcase::ClosedDiscrete);
    CHECK(a.derived == PeriodicSeq::parse("(10)"));
    AuxProfile b = aux_profile(xb.mu, xb.alpha, CaseLabel::XI);
    CHECK(b.subcase == Subcase::NotClosed);
    CHECK(b.derived == PeriodicSeq::parse("(110)"));
    CHECK(b.ordering_holds);
    CHECK(to_string(b.subcase) == "U⊊closureU=V");
    auto x = fixtures::spec(fixtures::twelve[9]);
    AuxProfile ax = aux_profile(x.mu, x.alpha, CaseLabel::X);
    CHECK(ax.derived.digit(0) == 0);
    CHECK_THROWS(aux_profile(x.mu, x.alpha, CaseLabel::I));
}

TEST_CASE("topology rows") {
    CHECK(topology_summary(CaseLabel::IX).inclusions == "U=closureU⊊V");
    CHECK(topology_summary(CaseLabel::IV).count_a == "ℵ0");
    CHECK(topology_summary(CaseLabel::IV).count_b == "2");
    CHECK(topology_summary(CaseLabel::II).count_a == "3");
    CHECK(topology_summary(CaseLabel::XI, Subcase::NotClosed).inclusions == "U⊊closureU=V");
    CHECK(topology_summary(CaseLabel::XII).inclusions == "U=closureU=V");
}

TEST_CASE("verdict text") {
    CHECK(Verdict::proven().to_string() == "Proven");
    CHECK(Verdict::refuted(3).to_string() == "RefutedWitness(3)");
    CHECK(Verdict::undecided(64).to_string() == "UndecidedAtDepth(64)");
}
