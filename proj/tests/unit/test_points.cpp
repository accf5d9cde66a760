#include "dbx/points.hpp"

#include "../fixtures.hpp"

#include <doctest.h>

using namespace dbx;

namespace {

DoubleBase golden() { return {ExactScalar::parse("phi"), ExactScalar::parse("phi")}; }

}  // namespace

TEST_CASE("a point of V minus U in the golden base") {
    DoubleBase Q = golden();
    BaseProfile p = profile(Q, 100);
    PointClass pc = classify_point(Q, p, ExactScalar(1), 100);
    CHECK(pc.b.literal() == "11(0)");
    CHECK(pc.l.literal() == "0(1)");
    CHECK(pc.in_V.proven_true());
    CHECK(pc.in_U.proven_false());
    CHECK(pc.in_A.proven_true());
    CHECK(pc.in_B.proven_true());
    CHECK(count_expansions(p, CaseLabel::IX, pc) == CountResult::countably_infinite());
}

TEST_CASE("unique points and endpoints") {
    DoubleBase Q(2, 2);
    BaseProfile p = profile(Q, 50);
    PointClass third = classify_point(Q, p, Rational(1, 3), 50);
    CHECK(third.in_U.proven_true());
    CHECK(third.count == CountResult::exact(1));
    CHECK_THROWS_AS(count_expansions(p, CaseLabel::C, third), DomainError);
    PointClass zero = classify_point(Q, p, ExactScalar(0), 50);
    CHECK(zero.in_U.proven_true());
    PointClass half = classify_point(Q, p, Rational(1, 2), 50);
    CHECK(count_expansions(p, CaseLabel::C, half) == CountResult::exact(2));
}

TEST_CASE("points outside V carry a witness") {
    DoubleBase Q = golden();
    BaseProfile p = profile(Q, 100);
    // (pi(1(0)), pi(0(1))) = (1/phi, 1) is a gap of the golden base.
    PointClass pc = classify_point(Q, p, Rational(3, 4), 100);
    CHECK(pc.in_V.proven_false());
    CHECK_THROWS_AS(count_expansions(p, CaseLabel::IX, pc), DomainError);
}

TEST_CASE("no expansion between a(x) and b(x) on C") {
    DoubleBase Q(2, 2);
    BaseProfile p = profile(Q, 50);
    PointClass pc = classify_point(Q, p, Rational(1, 2), 50);
    CHECK(between_expansions(Q, p, pc, 5).empty());
}

TEST_CASE("expansions between a(x) and b(x) in case VI") {
    DoubleBase Q(Rational(3, 2), 2);
    BaseProfile p = profile(Q, 100);
    PointClass pc = classify_point(Q, p, Rational(1, 2), 100);
    REQUIRE(pc.in_A.proven_true());
    auto cs = between_expansions(Q, p, pc, 3);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].literal() == "011(0)");
    CHECK(cs[1].literal() == "01011(0)");
    for (const auto& c : cs) {
        CHECK(compare(pi_eval(Q, c), Rational(1, 2)) == Ordering::Equal);
        CHECK(*pc.a.sequence() < c);
        CHECK(c < *pc.b.sequence());
    }
}

TEST_CASE("greedy admissibility") {
    PeriodicSeq alpha = PeriodicSeq::parse("(10)");
    CHECK(greedy_admissible(PeriodicSeq::parse("101(0)"), alpha));
    CHECK(!greedy_admissible(PeriodicSeq::parse("011(0)"), alpha));
    CHECK(!greedy_admissible(PeriodicSeq::parse("(10)"), alpha));
}

TEST_CASE("gaps of the golden base") {
    DoubleBase Q = golden();
    BaseProfile p = profile(Q, 100);
    Gap g = gap_partner(Q, p, PeriodicSeq::parse("1(0)"), 100);
    CHECK(g.l_right == PeriodicSeq::parse("0(1)"));
    CHECK(g.a_left == PeriodicSeq::parse("0(10)"));
    CHECK(g.m_right == PeriodicSeq::parse("1(01)"));
    CHECK(compare(g.x_left, g.x_right) == Ordering::Less);
    CHECK_THROWS_AS(gap_partner(Q, p, PeriodicSeq::parse("011(0)"), 100), std::invalid_argument);
    auto all = gaps_enumerate(Q, p, 4, 100);
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(compare(all[i].x_right, all[i + 1].x_left) != Ordering::Greater);
}

TEST_CASE("component sequence needs case IX") {
    DoubleBase Q = golden();
    BaseProfile p = profile(Q, 100);
    PointClass pc = classify_point(Q, p, ExactScalar(1), 100);
    PointClass next = next_in_component(Q, p, CaseLabel::IX, pc, 100);
    CHECK(next.a.sequence()->prefix(2) == "11");
    CHECK_THROWS_AS(next_in_component(Q, p, CaseLabel::I, pc, 100), std::invalid_argument);
}

TEST_CASE("case i: 1/q1 in A only, nothing between a and b") {
    const SolvedBase& s = fixtures::solved(fixtures::twelve[0]);
    PointClass pc = classify_point(s.base, s.forward, ExactScalar(1) / s.base.q1(), 200);
    CHECK(pc.in_A.proven_true());
    CHECK(pc.in_B.proven_false());
    CHECK(between_expansions(s.base, s.forward, pc, 4).empty());
    auto one = gaps_enumerate(s.base, s.forward, 1, 200);
    REQUIRE(one.size() == 1);
    CHECK(compare(one[0].x_left, ExactScalar(1) / s.base.q1()) == Ordering::Equal);
    CHECK(compare(one[0].x_right, s.base.constants().lazy_cut) == Ordering::Equal);
}

TEST_CASE("case ii counts") {
    const SolvedBase& s = fixtures::solved(fixtures::twelve[1]);
    const DoubleBase& Q = s.base;
    PointClass a = classify_point(Q, s.forward, ExactScalar(1) / Q.q1(), 200);
    CHECK(count_expansions(s.forward, CaseLabel::II, a) == CountResult::exact(3));
    PointClass b = classify_point(Q, s.forward, Q.constants().lazy_cut, 200);
    CHECK(b.in_B.proven_true());
    CHECK(b.in_A.proven_false());
    CHECK(count_expansions(s.forward, CaseLabel::II, b) == CountResult::exact(2));
    // pi(0(01)) has a single expansion in this base.
    PointClass u = classify_point(Q, s.forward, pi_eval(Q, PeriodicSeq::parse("0(01)")), 200);
    CHECK(u.in_U.proven_true());
}

TEST_CASE("case iv: the first intermediate expansions") {
    const SolvedBase& s = fixtures::solved(fixtures::twelve[3]);
    PointClass pc = classify_point(s.base, s.forward, ExactScalar(1) / s.base.q1(), 200);
    auto cs = between_expansions(s.base, s.forward, pc, 2);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == PeriodicSeq::parse("0111(0)"));
    CHECK(cs[1] == PeriodicSeq::parse("0110111(0)"));
}

TEST_CASE("quasi-greedy and quasi-lazy agree off C") {
    for (const auto& fx : fixtures::twelve) {
        const SolvedBase& s = fixtures::solved(fx);
        const DoubleBase& Q = s.base;
        for (ExactScalar x : {ExactScalar(1) / Q.q1(), Q.constants().lazy_cut, ExactScalar(1) / (Q.q1() * Q.q0())}) {
            PointClass pc = classify_point(Q, s.forward, x, 200);
            if (!pc.in_V.proven_true()) continue;
            CHECK_MESSAGE(pc.a.known_digits(100) == pc.m.known_digits(100), fx.name);
        }
    }
}

TEST_CASE("golden gap of the word 01") {
    DoubleBase Q = golden();
    BaseProfile p = profile(Q, 100);
    Gap g = gap_partner(Q, p, PeriodicSeq::parse("01(0)"), 100);
    ExactScalar phi = Q.q0();
    CHECK(compare(g.x_left, ExactScalar(1) / (phi * phi)) == Ordering::Equal);
    CHECK(compare(g.x_right, pi_eval(Q, PeriodicSeq::parse("00(1)"))) == Ordering::Equal);
    CHECK_THROWS_AS(gaps_enumerate(DoubleBase(2, 2), profile(DoubleBase(2, 2), 10), 3, 10), std::invalid_argument);
}
