#pragma once

#include "dbx/numerics.hpp"
#include "dbx/words.hpp"

#include <string>

namespace dbx {

enum class Region { OnC, InteriorA, OutsideA };

std::string to_string(Region r);

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BaseConstants {
    ExactScalar r;           // q0/q1
    ExactScalar ell;         // q1/(q0(q1-1)) - 1
    ExactScalar j_max;       // 1/(q1-1), right end of J_Q
    ExactScalar greedy_cut;  // 1/q1
    ExactScalar lazy_cut;    // 1/(q0(q1-1))
};

// Q = (q0, q1). Digit d is weighted by q_d.
class DoubleBase {
public:
    // Throws DomainError unless q0, q1 > 1 provably, UndecidableError when
    // the region comparison cannot be resolved.
    DoubleBase(ExactScalar q0, ExactScalar q1);

    const ExactScalar& q0() const { return q_[0]; }
    const ExactScalar& q1() const { return q_[1]; }
    const ExactScalar& q(int digit) const { return q_[digit]; }
    Region region() const { return region_; }
    bool in_A() const { return region_ != Region::OutsideA; }
    bool on_C() const { return region_ == Region::OnC; }
    const BaseConstants& constants() const { return k_; }
    bool exact() const { return q_[0].is_exact() && q_[1].is_exact(); }

    std::string to_string() const;

private:
    ExactScalar q_[2];
    Region region_;
    BaseConstants k_;
};

Region region(const DoubleBase& Q);

// Value of an eventually periodic digit sequence, in closed form.
ExactScalar pi_eval(const DoubleBase& Q, const PeriodicSeq& s);
// Value of a finite word followed by a tail whose value is `tail`.
ExactScalar pi_word(const DoubleBase& Q, std::string_view word, const ExactScalar& tail);

// Exact bounds for every extension of a digit prefix.
struct PiBounds {
    ExactScalar lo, hi;
};
PiBounds pi_bounds(const DoubleBase& Q, const DigitPrefix& p);

}  // namespace dbx
