#pragma once

#include "dbx/numerics.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>

namespace dbx {

// Polynomial in two variables (a, b) over Q.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& c);
    static BiPoly var_a();
    static BiPoly var_b();

    const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }
    int total_degree() const;
    bool is_zero() const { return t_.empty(); }
    double eval(double a, double b) const;
    // Value and the two partial derivatives.
    std::array<double, 3> eval_grad(double a, double b) const;
    // Divide out the largest monomial a^i b^j dividing every term.
    BiPoly without_monomial_factor() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
    friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y);

private:
    void add(std::pair<int, int> e, const Rational& c);
    std::map<std::pair<int, int>, Rational> t_;
};

// Common root (a, b) of P1, P2 near the numeric guess, as elements of one
// number field, demoted to rationals when both are rational. Empty when the
// root cannot be isolated.
struct ExactPair {
    ExactScalar a, b;
};
std::optional<ExactPair> exactify(const BiPoly& p1, const BiPoly& p2, double a, double b);

}  // namespace dbx
