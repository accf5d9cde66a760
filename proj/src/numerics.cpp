#include "dbx/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <vector>

namespace dbx {

// ---- QuadraticIrrational ------------------------------------------------

QuadraticIrrational::QuadraticIrrational(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    if (d_ < 2) throw std::invalid_argument("radicand must be at least 2");
    if (sgn(q_) == 0) throw std::invalid_argument("quadratic irrational with zero surd coefficient");
    // Pull square factors out of d.
    long f = 2;
    while (f * f <= d_) {
        if (d_ % (f * f) == 0) {
            d_ /= f * f;
            q_ *= f;
        } else {
            ++f;
        }
    }
    if (d_ == 1) throw std::invalid_argument("radicand is a perfect square");
}

int QuadraticIrrational::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sp == 0 || sp == sq) return sq;
    return cmp(p_ * p_, q_ * q_ * d_) > 0 ? sp : sq;
}

Enclosure QuadraticIrrational::enclose(unsigned bits) const {
    Rational qa = abs(q_);
    mpz_class qmag = qa.get_num() / qa.get_den() + 1;
    unsigned k = bits + 2 + static_cast<unsigned>(mpz_sizeinbase(qmag.get_mpz_t(), 2));
    mpz_class scaled = d_;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rational lo(s), hi(s + 1);
    mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), k);
    mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), k);
    Enclosure root{lo, hi};
    Enclosure r = q_ * root;
    r.lo += p_;
    r.hi += p_;
    return r;
}

// ---- RefinableInterval --------------------------------------------------

struct RefinableInterval::Node {
    virtual ~Node() = default;
    virtual Enclosure at(unsigned level) = 0;
    unsigned max_ref = default_max_refinements;
};

namespace {

struct LeafNode : RefinableInterval::Node {
    std::mutex mu;
    std::vector<Enclosure> cache;
    RefinableInterval::Refiner refine;

    Enclosure at(unsigned level) override {
        level = std::min(level, max_ref);
        std::lock_guard lk(mu);
        while (cache.size() <= level) {
            Enclosure next = refine ? refine(cache.back()) : cache.back();
            // Refiners may only shrink the enclosure.
            next.lo = std::max<Rational>(next.lo, cache.back().lo);
            next.hi = std::min<Rational>(next.hi, cache.back().hi);
            if (next.lo > next.hi) throw std::logic_error("refiner produced an empty enclosure");
            cache.push_back(std::move(next));
        }
        return cache[level];
    }
};

struct OpNode : RefinableInterval::Node {
    char op;
    ExactScalar a, b;
    unsigned divisor_level = 0;

    OpNode(char o, ExactScalar x, ExactScalar y) : op(o), a(std::move(x)), b(std::move(y)) {}

    Enclosure at(unsigned level) override {
        level = std::min(level, max_ref);
        Enclosure ea = a.enclose(level);
        Enclosure eb = b.enclose(op == '/' ? std::max(level, divisor_level) : level);
        Enclosure r;
        switch (op) {
            case '+': r = ea + eb; break;
            case '-': r = ea - eb; break;
            case '*': r = ea * eb; break;
            default: r = ea / eb; break;
        }
        return round_outward(r, level + 16);
    }
};

unsigned cap_of(const ExactScalar& x) {
    if (auto* i = x.as_interval()) return i->max_refinements();
    return default_max_refinements;
}

}  // namespace

RefinableInterval::RefinableInterval(Enclosure initial, Refiner refine, unsigned max_refinements) {
    if (initial.lo > initial.hi) throw std::invalid_argument("empty enclosure");
    auto n = std::make_shared<LeafNode>();
    n->cache.push_back(std::move(initial));
    n->refine = std::move(refine);
    n->max_ref = max_refinements;
    node_ = std::move(n);
}

RefinableInterval RefinableInterval::combine(char op, const ExactScalar& a, const ExactScalar& b) {
    auto n = std::make_shared<OpNode>(op, a, b);
    n->max_ref = std::min(cap_of(a), cap_of(b));
    if (op == '/') {
        bool found = false;
        for (unsigned k = 0; k <= cap_of(b); k = k < 16 ? k + 1 : k + 8) {
            if (!b.enclose(k).contains_zero()) {
                n->divisor_level = k;
                found = true;
                break;
            }
        }
        if (!found) throw UndecidableError("divisor not separated from zero");
    }
    return RefinableInterval(std::move(n));
}

Enclosure RefinableInterval::at(unsigned level) const { return node_->at(level); }
unsigned RefinableInterval::max_refinements() const { return node_->max_ref; }

// ---- ExactScalar ----------------------------------------------------------

ExactScalar::ExactScalar(QuadraticIrrational q) : v_(std::move(q)) {}

ExactScalar::ExactScalar(AlgebraicNumber a) {
    a.poly = a.field->reduce(a.poly);
    if (a.poly.degree() <= 0) {
        v_ = a.poly.is_zero() ? Rational(0) : a.poly[0];
    } else {
        v_ = std::move(a);
    }
}

ExactScalar ExactScalar::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty number");
    if (s == "phi") return QuadraticIrrational::golden_ratio();
    auto digits_only = [](const std::string& t, size_t from) {
        if (from >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(from), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    size_t sign_len = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool neg = s[0] == '-';
    std::string body = s.substr(sign_len);
    Rational r;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits_only(num, 0) || !digits_only(den, 0)) throw ParseError("malformed fraction: " + s);
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("zero denominator: " + s);
        r = Rational(n, d);
        r.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!digits_only(ip, 0) || !digits_only(fp, 0)) throw ParseError("malformed decimal: " + s);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        r = Rational(mpz_class(ip + fp), scale);
        r.canonicalize();
    } else {
        if (!digits_only(body, 0)) throw ParseError("malformed number: " + s);
        r = Rational(mpz_class(body));
    }
    if (neg) r = -r;
    return r;
}

Enclosure ExactScalar::enclose(unsigned level) const {
    return std::visit(
        [&](const auto& x) -> Enclosure {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return {x, x};
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                return x.enclose(level);
            } else if constexpr (std::is_same_v<T, AlgebraicNumber>) {
                return x.field->enclose(x.poly, level);
            } else {
                return x.at(level);
            }
        },
        v_);
}

double ExactScalar::approx() const {
    Enclosure e = enclose(64);
    Rational mid = (e.lo + e.hi) / 2;
    return mid.get_d();
}

namespace {
std::string decimal(const Rational& r, int digits) {
    mpf_class f(r, 256);
    std::ostringstream os;
    os.precision(digits);
    os << f;
    return os.str();
}
}  // namespace

std::string ExactScalar::to_string() const {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return x.get_str();
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                std::string s = sgn(x.rational_part()) != 0 ? x.rational_part().get_str() : "";
                if (!s.empty() && sgn(x.surd_coefficient()) > 0) s += "+";
                return s + x.surd_coefficient().get_str() + "*sqrt(" + std::to_string(x.radicand()) + ")";
            } else if constexpr (std::is_same_v<T, AlgebraicNumber>) {
                Enclosure e = x.field->root_enclosure();
                return x.poly.to_string("t") + " where " + x.field->modulus().to_string("t") + " = 0, t ~ " +
                       decimal((e.lo + e.hi) / 2, 20);
            } else {
                Enclosure e = x.at(x.max_refinements());
                return "[" + decimal(e.lo, 20) + ", " + decimal(e.hi, 20) + "]";
            }
        },
        v_);
}

// ---- arithmetic -----------------------------------------------------------

namespace {

struct QuadParts {
    Rational p, q;
    long d;
};

std::optional<QuadParts> quad_parts(const ExactScalar& x) {
    if (auto* r = x.as_rational()) return QuadParts{*r, 0, 0};
    if (auto* q = x.as_quadratic()) return QuadParts{q->rational_part(), q->surd_coefficient(), q->radicand()};
    return std::nullopt;
}

ExactScalar make_quadratic(Rational p, Rational q, long d) {
    if (sgn(q) == 0) return ExactScalar(std::move(p));
    return ExactScalar(QuadraticIrrational(std::move(p), std::move(q), d));
}

struct AlgParts {
    FieldPtr field;  // null for rationals
    RatPoly poly;
};

std::optional<AlgParts> alg_parts(const ExactScalar& x) {
    if (auto* r = x.as_rational()) return AlgParts{nullptr, RatPoly(*r)};
    if (auto* a = x.as_algebraic()) return AlgParts{a->field, a->poly};
    return std::nullopt;
}

bool is_exact_zero(const ExactScalar& x) {
    if (auto* r = x.as_rational()) return sgn(*r) == 0;
    return false;  // quadratic and algebraic kinds are nonzero by construction
}

ExactScalar arith(char op, const ExactScalar& a, const ExactScalar& b) {
    if (op == '/' && is_exact_zero(b)) throw DivisionByZero("division by zero");
    if (auto* ra = a.as_rational()) {
        if (auto* rb = b.as_rational()) {
            switch (op) {
                case '+': return Rational(*ra + *rb);
                case '-': return Rational(*ra - *rb);
                case '*': return Rational(*ra * *rb);
                default: return Rational(*ra / *rb);
            }
        }
    }
    auto qa = quad_parts(a), qb = quad_parts(b);
    if (qa && qb && (qa->d == 0 || qb->d == 0 || qa->d == qb->d)) {
        long d = std::max(qa->d, qb->d);
        switch (op) {
            case '+': return make_quadratic(qa->p + qb->p, qa->q + qb->q, d);
            case '-': return make_quadratic(qa->p - qb->p, qa->q - qb->q, d);
            case '*': return make_quadratic(qa->p * qb->p + qa->q * qb->q * d, qa->p * qb->q + qa->q * qb->p, d);
            default: {
                Rational n = qb->p * qb->p - qb->q * qb->q * d;
                Rational p = (qa->p * qb->p - qa->q * qb->q * d) / n;
                Rational q = (qa->q * qb->p - qa->p * qb->q) / n;
                return make_quadratic(p, q, d);
            }
        }
    }
    auto aa = alg_parts(a), ab = alg_parts(b);
    if (aa && ab && (!aa->field || !ab->field || aa->field == ab->field)) {
        FieldPtr f = aa->field ? aa->field : ab->field;
        switch (op) {
            case '+': return AlgebraicNumber{f, aa->poly + ab->poly};
            case '-': return AlgebraicNumber{f, aa->poly - ab->poly};
            case '*': return AlgebraicNumber{f, f->multiply(aa->poly, ab->poly)};
            default: {
                RatPoly inv;
                try {
                    inv = f->inverse(ab->poly);
                } catch (const std::domain_error&) {
                    throw DivisionByZero("division by zero");
                }
                return AlgebraicNumber{f, f->multiply(aa->poly, inv)};
            }
        }
    }
    return RefinableInterval::combine(op, a, b);
}

}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) { return *this = arith('+', *this, o); }
ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this = arith('-', *this, o); }
ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = arith('*', *this, o); }
ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this = arith('/', *this, o); }

ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
ExactScalar operator-(const ExactScalar& a) { return ExactScalar(0) - a; }

// ---- comparison -----------------------------------------------------------

namespace {

std::optional<int> exact_sign(const ExactScalar& x) {
    if (auto* r = x.as_rational()) return sgn(*r);
    if (auto* q = x.as_quadratic()) return q->sign();
    if (auto* a = x.as_algebraic()) return a->field->sign(a->poly);
    return std::nullopt;
}

}  // namespace

Ordering compare(const ExactScalar& a, const ExactScalar& b, unsigned max_refinements) {
    if (a.is_exact() && b.is_exact()) {
        ExactScalar d = a - b;
        if (auto s = exact_sign(d)) return *s < 0 ? Ordering::Less : (*s > 0 ? Ordering::Greater : Ordering::Equal);
    }
    auto* ia = a.as_interval();
    auto* ib = b.as_interval();
    if (ia && ib && ia->same_node(*ib)) return Ordering::Equal;
    unsigned cap = std::min({max_refinements, cap_of(a), cap_of(b)});
    for (unsigned k = 0;; k = k < 16 ? k + 1 : k + 8) {
        k = std::min(k, cap);
        Enclosure ea = a.enclose(k), eb = b.enclose(k);
        if (ea.hi < eb.lo) return Ordering::Less;
        if (ea.lo > eb.hi) return Ordering::Greater;
        if (k >= cap) break;
    }
    return Ordering::Undecidable;
}

std::optional<int> sign(const ExactScalar& a, unsigned max_refinements) {
    switch (compare(a, ExactScalar(0), max_refinements)) {
        case Ordering::Less: return -1;
        case Ordering::Equal: return 0;
        case Ordering::Greater: return 1;
        default: return std::nullopt;
    }
}

bool certainly_equal(const ExactScalar& a, const ExactScalar& b) { return compare(a, b) == Ordering::Equal; }

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
        default: return "Undecidable";
    }
}

// ---- ScalarSet --------------------------------------------------------------

namespace {
constexpr unsigned bucket_bits = 40;

mpz_class bucket_of(const Rational& x) {
    Rational f = floor_dyadic(x, bucket_bits);
    mpq_mul_2exp(f.get_mpq_t(), f.get_mpq_t(), bucket_bits);
    return f.get_num();
}
}  // namespace

std::optional<size_t> ScalarSet::find(const ExactScalar& x) const {
    if (!x.is_exact()) return std::nullopt;
    Enclosure e = x.enclose(bucket_bits + 8);
    mpz_class lo = bucket_of(e.lo) - 1, hi = bucket_of(e.hi) + 1;
    for (auto it = index_.lower_bound(lo); it != index_.end() && it->first <= hi; ++it)
        if (compare(items_[it->second], x) == Ordering::Equal) return it->second;
    return std::nullopt;
}

size_t ScalarSet::insert(const ExactScalar& x) {
    size_t i = items_.size();
    items_.push_back(x);
    if (x.is_exact()) index_.emplace(bucket_of(x.enclose(bucket_bits + 8).lo), i);
    return i;
}

}  // namespace dbx
