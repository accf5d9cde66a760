#include "dbx/numerics.hpp"
#include "dbx/words.hpp"

#include <doctest.h>

using namespace dbx;

namespace {

// Lexicographic order on a long common prefix; exact for sequences whose
// canonical forms have short preperiods and periods.
int lex_by_digits(const PeriodicSeq& a, const PeriodicSeq& b) {
    for (size_t i = 0; i < 400; ++i)
        if (a.digit(i) != b.digit(i)) return a.digit(i) < b.digit(i) ? -1 : 1;
    return 0;
}

}  // namespace

TEST_CASE("parsing and canonical forms") {
    CHECK(PeriodicSeq::parse("1(0)").literal() == "1(0)");
    CHECK(PeriodicSeq::parse("1") == PeriodicSeq::parse("1(0)"));
    CHECK(PeriodicSeq::parse("00(10)") == PeriodicSeq::parse("0(01)"));
    CHECK(PeriodicSeq::parse("(0101)").literal() == "(01)");
    CHECK(PeriodicSeq::parse("1(01)") == PeriodicSeq::parse("(10)"));
    CHECK_THROWS_AS(PeriodicSeq::parse(""), ParseError);
    CHECK_THROWS(PeriodicSeq::parse("12"));
    CHECK_THROWS(PeriodicSeq::parse("1(0"));
    CHECK_THROWS(PeriodicSeq::parse("()"));
}

TEST_CASE("digit access, prefixes and shifts") {
    PeriodicSeq s = PeriodicSeq::parse("110(01)");
    CHECK(s.prefix(9) == "110010101");
    CHECK(s.digit(3) == 0);
    CHECK(s.shifted(3) == PeriodicSeq::parse("(01)"));
    CHECK(s.shifted(4) == PeriodicSeq::parse("(10)"));
    CHECK(s.reflected() == PeriodicSeq::parse("001(10)"));
    CHECK(s.prepended("0") == PeriodicSeq::parse("0110(01)"));
    CHECK(s.tails().size() == 5);
    CHECK(!s.minimal_period());
    CHECK(PeriodicSeq::parse("(110)").minimal_period() == std::optional<size_t>(3));
}

TEST_CASE("classification") {
    CHECK(PeriodicSeq::zeros().classify() == SeqClass::Zero);
    CHECK(PeriodicSeq::ones().classify() == SeqClass::Ones);
    CHECK(PeriodicSeq::parse("0101").classify() == SeqClass::Finite);
    CHECK(PeriodicSeq::parse("10(1)").classify() == SeqClass::CoFinite);
    CHECK(PeriodicSeq::parse("(01)").classify() == SeqClass::DoublyInfinite);
}

TEST_CASE("order agrees with digit-by-digit comparison") {
    std::vector<std::string> lits = {"(0)",    "(1)",    "1(0)",    "0(1)",     "(01)",      "(10)",  "0(01)",
                                     "1(110)", "110(01)", "(110)",  "001(110)", "(00011)",  "(11000)", "00(110)",
                                     "11(001)", "10(1)", "(0111)", "111(0001)", "00(11110)", "(1110)"};
    for (const auto& x : lits)
        for (const auto& y : lits) {
            PeriodicSeq a = PeriodicSeq::parse(x), b = PeriodicSeq::parse(y);
            int want = lex_by_digits(a, b);
            auto got = a <=> b;
            CHECK_MESSAGE((want < 0 ? got < 0 : want > 0 ? got > 0 : got == 0), x << " vs " << y);
        }
}

TEST_CASE("comparison with partially known sequences") {
    PeriodicSeq s = PeriodicSeq::parse("(10)");
    CHECK(compare_known("11", s) == std::optional(std::strong_ordering::greater));
    CHECK(compare_known("100", s) == std::optional(std::strong_ordering::less));
    CHECK(!compare_known("1010", s));
    CHECK(compare_known("01", "00") == std::optional(std::strong_ordering::greater));
    CHECK(!compare_known("01", "0"));
}
