#pragma once

#include "dbx/number_field.hpp"
#include "dbx/polynomial.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dbx {

enum class Ordering { Less, Equal, Greater, Undecidable };

struct UndecidableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed to hold; indicates a bug or bad input data.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr unsigned default_max_refinements = 256;

// p + q*sqrt(d) with q != 0 and d >= 2 squarefree.
class QuadraticIrrational {
public:
    QuadraticIrrational(Rational p, Rational q, long d);

    static QuadraticIrrational golden_ratio() { return {Rational(1, 2), Rational(1, 2), 5}; }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coefficient() const { return q_; }
    long radicand() const { return d_; }

    int sign() const;
    Enclosure enclose(unsigned bits) const;
    QuadraticIrrational conjugate() const { return {p_, -q_, d_}; }
    Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

private:
    Rational p_, q_;
    long d_;
};

struct AlgebraicNumber {
    FieldPtr field;
    RatPoly poly;  // value is poly(theta)
};

class ExactScalar;

// Lazily refined rational enclosure. Level k is the enclosure after k
// refinement steps. Equality is never inferred from refinement.
class RefinableInterval {
public:
    using Refiner = std::function<Enclosure(const Enclosure&)>;

    RefinableInterval(Enclosure initial, Refiner refine, unsigned max_refinements = default_max_refinements);

    // Interval for a binary operation on scalars that cannot be combined
    // exactly. op is one of + - * /.
    static RefinableInterval combine(char op, const ExactScalar& a, const ExactScalar& b);

    Enclosure at(unsigned level) const;
    unsigned max_refinements() const;
    bool same_node(const RefinableInterval& o) const { return node_ == o.node_; }

    struct Node;

private:
    explicit RefinableInterval(std::shared_ptr<Node> n) : node_(std::move(n)) {}
    std::shared_ptr<Node> node_;
};

enum class ScalarKind { Rational, Quadratic, Algebraic, Interval };

class ExactScalar {
public:
    using Variant = std::variant<Rational, QuadraticIrrational, AlgebraicNumber, RefinableInterval>;

    ExactScalar() : v_(Rational(0)) {}
    ExactScalar(Rational r) : v_(std::move(r)) {}
    ExactScalar(long n) : v_(Rational(n)) {}
    ExactScalar(int n) : v_(Rational(n)) {}
    ExactScalar(QuadraticIrrational q);
    ExactScalar(AlgebraicNumber a);
    ExactScalar(RefinableInterval i) : v_(std::move(i)) {}

    // "p/q", a decimal such as "1.75", an integer, or "phi".
    static ExactScalar parse(std::string_view text);

    ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
    bool is_exact() const { return kind() != ScalarKind::Interval; }
    const Variant& value() const { return v_; }
    const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
    const QuadraticIrrational* as_quadratic() const { return std::get_if<QuadraticIrrational>(&v_); }
    const AlgebraicNumber* as_algebraic() const { return std::get_if<AlgebraicNumber>(&v_); }
    const RefinableInterval* as_interval() const { return std::get_if<RefinableInterval>(&v_); }

    // Enclosure of width roughly 2^-level (exact kinds) or the interval's
    // level-th refinement.
    Enclosure enclose(unsigned level) const;
    double approx() const;
    // Exact text for exact kinds, bracketed bounds for intervals.
    std::string to_string() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

private:
    Variant v_;
};

ExactScalar operator+(ExactScalar a, const ExactScalar& b);
ExactScalar operator-(ExactScalar a, const ExactScalar& b);
ExactScalar operator*(ExactScalar a, const ExactScalar& b);
// Throws DivisionByZero for an exact zero divisor and UndecidableError when
// an interval divisor cannot be separated from zero.
ExactScalar operator/(ExactScalar a, const ExactScalar& b);
ExactScalar operator-(const ExactScalar& a);

Ordering compare(const ExactScalar& a, const ExactScalar& b, unsigned max_refinements = default_max_refinements);
// Sign of a; nullopt when undecidable.
std::optional<int> sign(const ExactScalar& a, unsigned max_refinements = default_max_refinements);
// Exact equality when decidable.
bool certainly_equal(const ExactScalar& a, const ExactScalar& b);

std::string to_string(Ordering o);

// Set of scalars with exact membership. Lookups bucket by a coarse dyadic
// enclosure and confirm candidates with compare().
class ScalarSet {
public:
    // Index of an element equal to x, if any. Interval elements never match.
    std::optional<size_t> find(const ExactScalar& x) const;
    size_t insert(const ExactScalar& x);
    size_t size() const { return items_.size(); }
    const ExactScalar& operator[](size_t i) const { return items_[i]; }

private:
    std::vector<ExactScalar> items_;
    std::multimap<mpz_class, size_t> index_;
};

}  // namespace dbx
