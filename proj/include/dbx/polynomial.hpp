#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace dbx {

using Rational = mpq_class;

// Closed rational interval [lo, hi].
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Rational& c, const Enclosure& a);
// Requires 0 outside b.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

// Outward rounding to the dyadic grid 2^-bits.
Rational floor_dyadic(const Rational& x, unsigned bits);
Rational ceil_dyadic(const Rational& x, unsigned bits);
Enclosure round_outward(const Enclosure& e, unsigned bits);

// Univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(const Rational& c);  // constant
    RatPoly(long c) : RatPoly(Rational(c)) {}

    static RatPoly monomial(const Rational& c, int degree);
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Enclosure eval(const Enclosure& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    RatPoly derivative() const;
    RatPoly monic() const;
    // Primitive integer multiple with positive leading coefficient.
    RatPoly primitive() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend RatPoly operator-(const RatPoly& a);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Euclidean division; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);

// Monic gcd, zero if both are zero.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// Returns g = gcd(a,b) monic with s*a + t*b = g.
RatPoly extended_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

RatPoly squarefree_part(const RatPoly& p);
Rational resultant(const RatPoly& f, const RatPoly& g);

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p);
// Number of distinct real roots in (lo, hi].
int count_real_roots(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi);

// Interpolating polynomial through (xs[i], ys[i]); xs distinct.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace dbx
