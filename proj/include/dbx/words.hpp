#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dbx {

enum class SeqClass { Zero, Ones, Finite, CoFinite, DoublyInfinite };

std::string to_string(SeqClass c);

// Eventually periodic 0/1 sequence u v^inf kept in canonical form: the
// period is primitive and the preperiod does not end with the last digit of
// the period. Two sequences are equal iff their canonical forms are.
class PeriodicSeq {
public:
    PeriodicSeq() : per_("0") {}
    // Throws ParseError on digits other than 0/1 or an empty period.
    PeriodicSeq(std::string preperiod, std::string period);

    // Literal grammar: bits ['(' bits ')'], e.g. "1(10)", "(01)", "110".
    // A missing group means the period "0".
    static PeriodicSeq parse(std::string_view text);
    static PeriodicSeq zeros() { return {"", "0"}; }
    static PeriodicSeq ones() { return {"", "1"}; }

    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }
    std::string literal() const { return pre_ + "(" + per_ + ")"; }

    // Digit at 0-based position i.
    int digit(size_t i) const;
    std::string prefix(size_t n) const;

    PeriodicSeq shifted(size_t n) const;
    PeriodicSeq reflected() const;
    PeriodicSeq prepended(std::string_view word) const;
    // sigma^i for i = 0 .. |pre|+|per|-1, which covers every tail.
    std::vector<PeriodicSeq> tails() const;
    // Smallest k >= 1 with sigma^k(s) == s, if s is purely periodic.
    std::optional<size_t> minimal_period() const;
    bool purely_periodic() const { return pre_.empty(); }

    SeqClass classify() const;

    friend bool operator==(const PeriodicSeq&, const PeriodicSeq&) = default;
    friend std::strong_ordering operator<=>(const PeriodicSeq& a, const PeriodicSeq& b);

private:
    std::string pre_, per_;
};

std::strong_ordering compare_lex(const PeriodicSeq& a, const PeriodicSeq& b);

// A finite block of digits known to start some infinite sequence.
struct DigitPrefix {
    std::string digits;
    size_t depth() const { return digits.size(); }
};

// Order between a prefix-known sequence and a fully known one, if the
// known digits decide it.
std::optional<std::strong_ordering> compare_known(std::string_view prefix, const PeriodicSeq& s);
std::optional<std::strong_ordering> compare_known(std::string_view a, std::string_view b);

}  // namespace dbx
