#pragma once

#include "dbx/bases.hpp"

#include <optional>
#include <variant>

namespace dbx {

enum class ExpansionKind { Greedy, QuasiGreedy, Lazy, QuasiLazy };

std::string to_string(ExpansionKind k);
ExpansionKind parse_expansion_kind(std::string_view s);

enum class TruncationReason { DepthCap, UndecidableComparison };

std::string to_string(TruncationReason r);

struct PeriodicExpansion {
    PeriodicSeq seq;
    size_t cycle_start;   // index of the first digit of the cycle
    size_t cycle_length;  // digits emitted per cycle of the state orbit
};

struct PrefixExpansion {
    DigitPrefix prefix;
    TruncationReason reason;
};

class ExpansionResult {
public:
    ExpansionResult(PeriodicExpansion p) : v_(std::move(p)) {}
    ExpansionResult(PrefixExpansion p) : v_(std::move(p)) {}
    // Certified sequence without orbit data.
    static ExpansionResult certified(PeriodicSeq s);

    bool is_periodic() const { return std::holds_alternative<PeriodicExpansion>(v_); }
    const PeriodicExpansion& periodic() const { return std::get<PeriodicExpansion>(v_); }
    const PrefixExpansion& prefix_only() const { return std::get<PrefixExpansion>(v_); }
    const PeriodicSeq* sequence() const;

    // Known leading digits: n of them for periodic results, at most the
    // truncation depth otherwise.
    std::string known_digits(size_t n) const;
    // Number of known digits; SIZE_MAX for periodic results.
    size_t known_length() const;
    std::string literal() const;

private:
    std::variant<PeriodicExpansion, PrefixExpansion> v_;
};

// Renormalized digit stream: s_0 = x, s_N = q_d * s_{N-1} - d.
// Single consumer; not shareable mid-iteration.
class ExpansionStream {
public:
    ExpansionStream(const DoubleBase& Q, ExactScalar x, ExpansionKind kind);

    // Next digit, or nullopt when the threshold comparison is undecidable.
    std::optional<int> next();
    const ExactScalar& state() const { return s_; }
    size_t emitted() const { return n_; }

private:
    const DoubleBase& Q_;
    ExactScalar s_;
    ExpansionKind kind_;
    size_t n_ = 0;
};

// One of the four canonical expansions of x in J_Q. Throws DomainError if
// Q is outside A or x outside [0, 1/(q1-1)].
ExpansionResult expansion_stream(const DoubleBase& Q, const ExactScalar& x, ExpansionKind kind, size_t depth_cap);

// a(x) from b(x), and m(x) from l(x), via alpha(Q) and mu(Q).
PeriodicSeq to_quasi_greedy(const PeriodicSeq& b, const ExpansionResult& alpha);
PeriodicSeq to_quasi_lazy(const PeriodicSeq& l, const ExpansionResult& mu);

}  // namespace dbx
