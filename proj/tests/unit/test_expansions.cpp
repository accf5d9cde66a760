#include "dbx/expansions.hpp"

#include <doctest.h>

#include <random>

using namespace dbx;

namespace {

std::string lit(const DoubleBase& Q, const char* x, ExpansionKind k) {
    return expansion_stream(Q, ExactScalar::parse(x), k, 200).literal();
}

// Digits from remainders: after digits with value P and weight product W,
// the greedy digit is 1 iff x - P >= W/q1.
std::string remainder_greedy(const Rational& q0, const Rational& q1, const Rational& x, size_t n) {
    Rational rem = x, w = 1;
    std::string out;
    for (size_t i = 0; i < n; ++i) {
        bool one = rem >= w / q1;
        w /= one ? q1 : q0;
        if (one) rem -= w;
        out.push_back(one ? '1' : '0');
    }
    return out;
}

}  // namespace

TEST_CASE("base 2 on C") {
    DoubleBase Q(2, 2);
    CHECK(lit(Q, "1/2", ExpansionKind::Greedy) == "1(0)");
    CHECK(lit(Q, "1/2", ExpansionKind::QuasiGreedy) == "0(1)");
    CHECK(lit(Q, "1/2", ExpansionKind::Lazy) == "0(1)");
    CHECK(lit(Q, "1/2", ExpansionKind::QuasiLazy) == "1(0)");
    CHECK(lit(Q, "1/3", ExpansionKind::Greedy) == "(01)");
}

TEST_CASE("endpoint conventions") {
    DoubleBase Q(ExactScalar::parse("phi"), ExactScalar::parse("phi"));
    CHECK(lit(Q, "0", ExpansionKind::QuasiGreedy) == "(1)");
    CHECK(lit(Q, "0", ExpansionKind::Greedy) == "(0)");
    ExactScalar top = Q.constants().j_max;
    CHECK(expansion_stream(Q, top, ExpansionKind::QuasiLazy, 50).literal() == "(0)");
    CHECK(expansion_stream(Q, top, ExpansionKind::Lazy, 50).literal() == "(1)");
}

TEST_CASE("golden ratio profile") {
    DoubleBase Q(ExactScalar::parse("phi"), ExactScalar::parse("phi"));
    auto a = expansion_stream(Q, Q.constants().r, ExpansionKind::QuasiGreedy, 100);
    auto m = expansion_stream(Q, Q.constants().ell, ExpansionKind::QuasiLazy, 100);
    CHECK(a.literal() == "(10)");
    CHECK(m.literal() == "(01)");
    CHECK(a.periodic().cycle_length == 2);
}

TEST_CASE("domain errors and truncation") {
    DoubleBase Q(2, 2);
    CHECK_THROWS_AS(expansion_stream(Q, ExactScalar(2), ExpansionKind::Greedy, 10), DomainError);
    CHECK_THROWS_AS(expansion_stream(Q, ExactScalar(-1), ExpansionKind::Greedy, 10), DomainError);
    CHECK_THROWS_AS(expansion_stream(DoubleBase(3, 3), ExactScalar(0), ExpansionKind::Greedy, 10), DomainError);
    DoubleBase R(Rational(3, 2), Rational(3, 2));
    auto e = expansion_stream(R, Rational(1, 2), ExpansionKind::Greedy, 30);
    REQUIRE(!e.is_periodic());
    CHECK(e.prefix_only().reason == TruncationReason::DepthCap);
    CHECK(e.known_length() == 30);
}

TEST_CASE("greedy digits agree with remainder arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> n(1, 99);
    for (int t = 0; t < 60; ++t) {
        Rational q0(100 + n(rng), 100), q1(100 + n(rng), 100);
        q0.canonicalize();
        q1.canonicalize();
        DoubleBase Q(q0, q1);
        if (!Q.in_A()) continue;
        Rational x = Rational(n(rng), 100) / (q1 - 1);
        auto e = expansion_stream(Q, x, ExpansionKind::Greedy, 48);
        CHECK(e.known_digits(48) == remainder_greedy(q0, q1, x, 48));
    }
}

TEST_CASE("quasi-greedy from greedy") {
    DoubleBase Q(ExactScalar::parse("phi"), ExactScalar::parse("phi"));
    auto alpha = expansion_stream(Q, Q.constants().r, ExpansionKind::QuasiGreedy, 100);
    auto mu = expansion_stream(Q, Q.constants().ell, ExpansionKind::QuasiLazy, 100);
    for (const char* b : {"1(0)", "11(0)", "101(0)"}) {
        PeriodicSeq s = PeriodicSeq::parse(b);
        ExactScalar x = pi_eval(Q, s);
        CHECK(to_quasi_greedy(s, alpha) == *expansion_stream(Q, x, ExpansionKind::QuasiGreedy, 200).sequence());
    }
    for (const char* l : {"0(1)", "00(1)", "010(1)"}) {
        PeriodicSeq s = PeriodicSeq::parse(l);
        ExactScalar x = pi_eval(Q, s);
        CHECK(to_quasi_lazy(s, mu) == *expansion_stream(Q, x, ExpansionKind::QuasiLazy, 200).sequence());
    }
}
