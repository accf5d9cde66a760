#include "dbx/words.hpp"

#include "dbx/numerics.hpp"

#include <algorithm>
#include <numeric>

namespace dbx {

std::string to_string(SeqClass c) {
    switch (c) {
        case SeqClass::Zero: return "Zero";
        case SeqClass::Ones: return "Ones";
        case SeqClass::Finite: return "Finite";
        case SeqClass::CoFinite: return "CoFinite";
        default: return "DoublyInfinite";
    }
}

namespace {

void check_bits(std::string_view s) {
    for (char c : s)
        if (c != '0' && c != '1') throw ParseError("digit outside {0,1}: '" + std::string(1, c) + "'");
}

size_t primitive_root_length(const std::string& w) {
    size_t n = w.size();
    for (size_t k = 1; k < n; ++k) {
        if (n % k) continue;
        bool ok = true;
        for (size_t i = k; i < n && ok; ++i) ok = w[i] == w[i - k];
        if (ok) return k;
    }
    return n;
}

}  // namespace

PeriodicSeq::PeriodicSeq(std::string preperiod, std::string period) : pre_(std::move(preperiod)), per_(std::move(period)) {
    check_bits(pre_);
    check_bits(per_);
    if (per_.empty()) throw ParseError("empty period");
    per_.resize(primitive_root_length(per_));
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    }
}

PeriodicSeq PeriodicSeq::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty sequence literal");
    auto open = text.find('(');
    if (open == std::string_view::npos) {
        if (text.find(')') != std::string_view::npos) throw ParseError("unbalanced ')'");
        return {std::string(text), "0"};
    }
    if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1)
        throw ParseError("malformed sequence literal: " + std::string(text));
    return {std::string(text.substr(0, open)), std::string(text.substr(open + 1, text.size() - open - 2))};
}

int PeriodicSeq::digit(size_t i) const {
    if (i < pre_.size()) return pre_[i] - '0';
    return per_[(i - pre_.size()) % per_.size()] - '0';
}

std::string PeriodicSeq::prefix(size_t n) const {
    std::string s;
    s.reserve(n);
    for (size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + digit(i)));
    return s;
}

PeriodicSeq PeriodicSeq::shifted(size_t n) const {
    if (n <= pre_.size()) return {pre_.substr(n), per_};
    size_t r = (n - pre_.size()) % per_.size();
    return {"", per_.substr(r) + per_.substr(0, r)};
}

PeriodicSeq PeriodicSeq::reflected() const {
    std::string p = pre_, q = per_;
    for (auto& c : p) c = c == '0' ? '1' : '0';
    for (auto& c : q) c = c == '0' ? '1' : '0';
    return {p, q};
}

PeriodicSeq PeriodicSeq::prepended(std::string_view word) const { return {std::string(word) + pre_, per_}; }

std::vector<PeriodicSeq> PeriodicSeq::tails() const {
    std::vector<PeriodicSeq> out;
    for (size_t i = 0; i < pre_.size() + per_.size(); ++i) out.push_back(shifted(i));
    return out;
}

std::optional<size_t> PeriodicSeq::minimal_period() const {
    if (!pre_.empty()) return std::nullopt;
    return per_.size();
}

SeqClass PeriodicSeq::classify() const {
    if (per_ == "0") return pre_.empty() ? SeqClass::Zero : SeqClass::Finite;
    if (per_ == "1") return pre_.empty() ? SeqClass::Ones : SeqClass::CoFinite;
    return SeqClass::DoublyInfinite;
}

std::strong_ordering operator<=>(const PeriodicSeq& a, const PeriodicSeq& b) {
    // Beyond max preperiod + lcm of periods both sequences repeat in step.
    size_t bound = std::max(a.pre_.size(), b.pre_.size()) + std::lcm(a.per_.size(), b.per_.size());
    for (size_t i = 0; i < bound; ++i) {
        int x = a.digit(i), y = b.digit(i);
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const PeriodicSeq& a, const PeriodicSeq& b) { return a <=> b; }

std::optional<std::strong_ordering> compare_known(std::string_view prefix, const PeriodicSeq& s) {
    for (size_t i = 0; i < prefix.size(); ++i) {
        int x = prefix[i] - '0', y = s.digit(i);
        if (x != y) return x <=> y;
    }
    return std::nullopt;
}

std::optional<std::strong_ordering> compare_known(std::string_view a, std::string_view b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::nullopt;
}

}  // namespace dbx
