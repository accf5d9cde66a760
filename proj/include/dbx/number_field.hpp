#pragma once

#include "dbx/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

namespace dbx {

// Q(theta) for one real root theta of a squarefree polynomial m, located by
// a rational isolating interval. m need not be irreducible: when a zero test
// meets a proper factor of m, m is replaced by the factor that vanishes at
// theta (dynamic evaluation). Elements are polynomials in theta reduced
// modulo the current m; a representative reduced modulo an older m stays
// valid because every later modulus divides the earlier ones.
class NumberField {
public:
    // m squarefree of degree >= 1 with exactly one real root in [lo, hi] and
    // m(lo), m(hi) nonzero. Throws std::invalid_argument otherwise.
    static std::shared_ptr<NumberField> create(const RatPoly& m, const Rational& lo, const Rational& hi);

    RatPoly modulus() const;
    int degree() const;
    Enclosure root_enclosure() const;
    std::uint64_t id() const { return id_; }

    RatPoly reduce(const RatPoly& p) const;
    RatPoly multiply(const RatPoly& a, const RatPoly& b) const;
    // p(theta) == 0, decided exactly.
    bool is_zero(const RatPoly& p);
    int sign(const RatPoly& p);
    // Inverse of p(theta); throws std::domain_error when p(theta) == 0.
    RatPoly inverse(const RatPoly& p);
    // Enclosure of p(theta) of width at most 2^-bits.
    Enclosure enclose(const RatPoly& p, unsigned bits);
    // Replace m by f when f divides m and vanishes at theta. Returns whether
    // the replacement happened.
    bool adopt_factor(const RatPoly& f);

private:
    NumberField(RatPoly m, Rational lo, Rational hi);

    bool theta_is_root_locked(const RatPoly& g) const;
    bool is_zero_locked(const RatPoly& reduced);
    void refine_locked();
    Enclosure enclose_locked(const RatPoly& p, unsigned bits);

    mutable std::mutex mu_;
    RatPoly m_;
    Rational lo_, hi_;
    int sign_lo_;
    std::uint64_t id_;
};

using FieldPtr = std::shared_ptr<NumberField>;

}  // namespace dbx
