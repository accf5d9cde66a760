#include "dbx/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dbx {

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

Enclosure operator*(const Rational& c, const Enclosure& a) {
    if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an enclosure of zero");
    Enclosure inv{1 / b.hi, 1 / b.lo};
    return a * inv;
}

Rational floor_dyadic(const Rational& x, unsigned bits) {
    mpz_class num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational r(q);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

Rational ceil_dyadic(const Rational& x, unsigned bits) {
    mpz_class num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational r(q);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

Enclosure round_outward(const Enclosure& e, unsigned bits) {
    return {floor_dyadic(e.lo, bits), ceil_dyadic(e.hi, bits)};
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<size_t>(i)];
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Enclosure RatPoly::eval(const Enclosure& x) const {
    // Horner on the interval; the centred form would be tighter but this is
    // refined by shrinking x anyway.
    Enclosure acc{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    RatPoly r = *this;
    Rational lc = leading();
    for (auto& c : r.c_) c /= lc;
    return r;
}

RatPoly RatPoly::primitive() const {
    if (is_zero()) return {};
    mpz_class l = 1, g = 0;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Rational> v;
    for (const auto& c : c_) {
        Rational s = c * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
        v.push_back(s);
    }
    if (sgn(v.back()) < 0) g = -g;
    for (auto& c : v) c /= g;
    return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

RatPoly operator-(const RatPoly& a) { return a * Rational(-1); }

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1);
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<size_t>(i)] * inv;
        if (sgn(f) == 0) continue;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[j];
    }
    r.resize(static_cast<size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RatPoly extended_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b, s0 = 1, s1 = {}, t0 = {}, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = {};
        t = {};
        return {};
    }
    Rational inv = 1 / r0.leading();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return p.monic();
    RatPoly g = gcd(p, p.derivative());
    return (p / g).monic();
}

Rational resultant(const RatPoly& f0, const RatPoly& g0) {
    if (f0.is_zero() || g0.is_zero()) return 0;
    RatPoly f = f0, g = g0;
    Rational res = 1;
    while (true) {
        int m = f.degree(), n = g.degree();
        if (n == 0) {
            Rational p = 1;
            for (int i = 0; i < m; ++i) p *= g.leading();
            return res * p;
        }
        RatPoly r = f % g;
        if (r.is_zero()) return 0;
        int k = r.degree();
        // res(f,g) = (-1)^{mn} lc(g)^{m-k} res(g, r)
        if ((m % 2 == 1) && (n % 2 == 1)) res = -res;
        for (int i = 0; i < m - k; ++i) res *= g.leading();
        f = std::move(g);
        g = std::move(r);
    }
}

namespace {
// Primitive multiple by a positive factor, so signs are kept.
RatPoly positive_primitive(const RatPoly& p) {
    RatPoly q = p.primitive();
    return sgn(q.leading()) == sgn(p.leading()) ? q : -q;
}
}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{positive_primitive(p), positive_primitive(p.derivative())};
    while (chain.back().degree() > 0) {
        RatPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-positive_primitive(r));
    }
    return chain;
}

namespace {
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace

int count_real_roots(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    RatPoly p;
    for (size_t k = n; k-- > 0;) {
        p = p * RatPoly(std::vector<Rational>{-xs[k], 1});
        p += RatPoly(dd[k]);
    }
    return p;
}

}  // namespace dbx
