#include "dbx/report.hpp"

#include <doctest.h>

using namespace dbx;

TEST_CASE("numbers carry their representation") {
    CHECK(to_json(ExactScalar(Rational(3, 2)))["type"] == "rational");
    CHECK(to_json(ExactScalar(Rational(3, 2)))["value"] == "3/2");
    json q = to_json(ExactScalar::parse("phi"));
    CHECK(q["type"] == "quadratic");
    CHECK(q["d"] == 5);
    FieldPtr K = NumberField::create(RatPoly({Rational(-2), 0, 0, 1}), 1, 2);
    json a = to_json(ExactScalar(AlgebraicNumber{K, RatPoly::x()}));
    CHECK(a["type"] == "algebraic");
    CHECK(a["minpoly"] == "t^3 - 2");
    RefinableInterval i(Enclosure{0, 1}, nullptr);
    json iv = to_json(ExactScalar(i));
    CHECK(iv["type"] == "interval");
    CHECK(iv["width"] == 1.0);
}

TEST_CASE("expansions and counts") {
    DoubleBase Q(2, 2);
    json e = to_json(expansion_stream(Q, Rational(1, 2), ExpansionKind::Greedy, 10));
    CHECK(e["status"] == "Periodic");
    CHECK(e["digits"] == "1(0)");
    CHECK(e["class"] == "Finite");
    CHECK(to_json(CountResult::at_least(2, 64)) == "AtLeastAtDepth(2, 64)");
    CHECK(to_json(Verdict::refuted(4)) == "RefutedWitness(4)");
}
