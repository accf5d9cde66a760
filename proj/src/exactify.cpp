#include "dbx/exactify.hpp"

#include <cmath>
#include <limits>

namespace dbx {

BiPoly::BiPoly(const Rational& c) {
    if (sgn(c) != 0) t_[{0, 0}] = c;
}

BiPoly BiPoly::var_a() {
    BiPoly p;
    p.t_[{1, 0}] = 1;
    return p;
}

BiPoly BiPoly::var_b() {
    BiPoly p;
    p.t_[{0, 1}] = 1;
    return p;
}

int BiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
}

double BiPoly::eval(double a, double b) const { return eval_grad(a, b)[0]; }

std::array<double, 3> BiPoly::eval_grad(double a, double b) const {
    std::array<double, 3> v{0, 0, 0};
    for (const auto& [e, c] : t_) {
        double k = c.get_d();
        auto [i, j] = e;
        double ai = std::pow(a, i), bj = std::pow(b, j);
        v[0] += k * ai * bj;
        if (i > 0) v[1] += k * i * std::pow(a, i - 1) * bj;
        if (j > 0) v[2] += k * j * ai * std::pow(b, j - 1);
    }
    return v;
}

BiPoly BiPoly::without_monomial_factor() const {
    if (t_.empty()) return *this;
    int mi = std::numeric_limits<int>::max(), mj = mi;
    for (const auto& [e, c] : t_) {
        mi = std::min(mi, e.first);
        mj = std::min(mj, e.second);
    }
    BiPoly out;
    for (const auto& [e, c] : t_) out.t_[{e.first - mi, e.second - mj}] = c;
    return out;
}

void BiPoly::add(std::pair<int, int> e, const Rational& c) {
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    } else if (sgn(c) == 0) {
        t_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly out;
    for (const auto& [e, c] : x.t_)
        for (const auto& [f, d] : y.t_) out.add({e.first + f.first, e.second + f.second}, c * d);
    return out;
}

namespace {

// Coefficients in Y, each a polynomial in theta.
using KPoly = std::vector<RatPoly>;

// P(theta - c Y, Y).
KPoly substitute(const BiPoly& p, long c) {
    KPoly out;
    for (const auto& [e, coef] : p.terms()) {
        auto [i, j] = e;
        mpz_class binom = 1;
        Rational ck = 1;
        for (int k = 0; k <= i; ++k) {
            size_t deg = static_cast<size_t>(k + j);
            if (out.size() <= deg) out.resize(deg + 1);
            out[deg] += RatPoly::monomial(coef * Rational(binom) * ck, i - k);
            binom = binom * (i - k) / (k + 1);
            ck *= -c;
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

RatPoly specialize(const KPoly& f, const Rational& t) {
    std::vector<Rational> c;
    for (const auto& k : f) c.push_back(k.eval(t));
    return RatPoly(std::move(c));
}

// Res_Y by evaluation at points where neither leading coefficient
// vanishes, then interpolation.
RatPoly eliminate(const KPoly& f, const KPoly& g, int bound) {
    std::vector<Rational> xs, ys;
    for (long n = 0; static_cast<int>(xs.size()) <= bound; ++n) {
        Rational t = (n % 2 == 0) ? Rational(n / 2) : Rational(-(n + 1) / 2);
        if (sgn(f.back().eval(t)) == 0 || sgn(g.back().eval(t)) == 0) continue;
        xs.push_back(t);
        ys.push_back(resultant(specialize(f, t), specialize(g, t)));
    }
    return interpolate(xs, ys);
}

std::optional<Enclosure> isolate(const RatPoly& r, double theta) {
    if (r.degree() < 1) return std::nullopt;
    auto chain = sturm_chain(r);
    Rational center(theta);
    for (int e = 12; e <= 40; ++e) {
        Rational w = Rational(1) / Rational(mpz_class(1) << e);
        Rational lo = center - w, hi = center + w;
        int n = count_real_roots(chain, lo, hi);
        if (n == 0) return std::nullopt;
        if (n == 1 && r.sign_at(lo) != 0 && r.sign_at(hi) != 0) return Enclosure{lo, hi};
    }
    return std::nullopt;
}

void trim(NumberField& K, KPoly& f) {
    for (auto& c : f) c = K.reduce(c);
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

KPoly kgcd(NumberField& K, KPoly f, KPoly g) {
    trim(K, f);
    trim(K, g);
    while (!g.empty()) {
        RatPoly inv = K.inverse(g.back());
        for (auto& c : g) c = K.multiply(c, inv);
        g.back() = 1;
        while (f.size() >= g.size()) {
            RatPoly lc = f.back();
            size_t shift = f.size() - g.size();
            for (size_t i = 0; i + 1 < g.size(); ++i) f[shift + i] = K.reduce(f[shift + i] - K.multiply(lc, g[i]));
            f.pop_back();
            trim(K, f);
        }
        std::swap(f, g);
    }
    return f;
}

// Small-denominator rational equal to p(theta), if any.
std::optional<Rational> rational_value(NumberField& K, const RatPoly& p) {
    if (K.reduce(p).degree() <= 0) return K.reduce(p).coeff(0);
    Enclosure e = K.enclose(p, 160);
    Rational x = (e.lo + e.hi) / 2;
    // Continued fraction convergents of the midpoint.
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational rest = x;
    for (int i = 0; i < 64; ++i) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        Rational guess(h1, k1);
        guess.canonicalize();
        if (mpz_sizeinbase(k1.get_mpz_t(), 2) > 48) break;
        if (guess >= e.lo && guess <= e.hi && K.is_zero(p - RatPoly(guess))) return guess;
        Rational frac = rest - Rational(a);
        if (sgn(frac) == 0) break;
        rest = 1 / frac;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ExactPair> exactify(const BiPoly& p1_in, const BiPoly& p2_in, double a, double b) {
    BiPoly p1 = p1_in.without_monomial_factor(), p2 = p2_in.without_monomial_factor();
    int bound = p1.total_degree() * p2.total_degree();
    for (long c : {0L, 1L, -1L, 2L, -2L, 3L}) {
        KPoly f = substitute(p1, c), g = substitute(p2, c);
        if (f.empty() || g.empty()) return std::nullopt;
        RatPoly r = eliminate(f, g, bound);
        if (r.is_zero()) continue;
        r = squarefree_part(r).primitive();
        auto iso = isolate(r, a + static_cast<double>(c) * b);
        if (!iso) continue;
        FieldPtr K = NumberField::create(r, iso->lo, iso->hi);
        KPoly h;
        try {
            h = kgcd(*K, f, g);
        } catch (const std::domain_error&) {
            continue;
        }
        if (h.size() != 2) continue;
        RatPoly pb = K->reduce(-h[0]);
        RatPoly pa = K->reduce(RatPoly::x() - pb * Rational(c));
        auto ra = rational_value(*K, pa), rb = rational_value(*K, pb);
        if (ra && rb) return ExactPair{*ra, *rb};
        return ExactPair{AlgebraicNumber{K, pa}, AlgebraicNumber{K, pb}};
    }
    return std::nullopt;
}

}  // namespace dbx
