#include "dbx/number_field.hpp"

#include <atomic>
#include <stdexcept>

namespace dbx {

namespace {
std::atomic<std::uint64_t> next_field_id{1};
}

NumberField::NumberField(RatPoly m, Rational lo, Rational hi)
    : m_(std::move(m)), lo_(std::move(lo)), hi_(std::move(hi)), id_(next_field_id++) {
    sign_lo_ = m_.sign_at(lo_);
}

std::shared_ptr<NumberField> NumberField::create(const RatPoly& m, const Rational& lo, const Rational& hi) {
    if (m.degree() < 1) throw std::invalid_argument("number field modulus must have positive degree");
    if (lo > hi) throw std::invalid_argument("empty isolating interval");
    RatPoly mm = m.monic();
    if (gcd(mm, mm.derivative()).degree() > 0) throw std::invalid_argument("number field modulus is not squarefree");
    if (lo == hi) {
        if (mm.sign_at(lo) != 0) throw std::invalid_argument("degenerate interval is not a root");
        return std::shared_ptr<NumberField>(new NumberField(RatPoly(std::vector<Rational>{-lo, 1}), lo, hi));
    }
    if (mm.sign_at(lo) == 0 || mm.sign_at(hi) == 0) throw std::invalid_argument("interval endpoint is a root");
    if (count_real_roots(sturm_chain(mm), lo, hi) != 1) throw std::invalid_argument("interval does not isolate one root");
    return std::shared_ptr<NumberField>(new NumberField(std::move(mm), lo, hi));
}

RatPoly NumberField::modulus() const {
    std::lock_guard lk(mu_);
    return m_;
}

int NumberField::degree() const {
    std::lock_guard lk(mu_);
    return m_.degree();
}

Enclosure NumberField::root_enclosure() const {
    std::lock_guard lk(mu_);
    return {lo_, hi_};
}

RatPoly NumberField::reduce(const RatPoly& p) const {
    std::lock_guard lk(mu_);
    if (p.degree() < m_.degree()) return p;
    return p % m_;
}

RatPoly NumberField::multiply(const RatPoly& a, const RatPoly& b) const {
    std::lock_guard lk(mu_);
    return (a * b) % m_;
}

bool NumberField::theta_is_root_locked(const RatPoly& g) const {
    if (lo_ == hi_) return g.sign_at(lo_) == 0;
    // g divides m, so its roots in [lo, hi] are simple and at most one.
    return g.sign_at(lo_) * g.sign_at(hi_) < 0;
}

bool NumberField::is_zero_locked(const RatPoly& reduced) {
    if (reduced.is_zero()) return true;
    RatPoly g = gcd(reduced, m_);
    if (g.degree() <= 0) return false;
    if (theta_is_root_locked(g)) {
        m_ = g;
        sign_lo_ = lo_ == hi_ ? 0 : m_.sign_at(lo_);
        return true;
    }
    m_ = (m_ / g).monic();
    sign_lo_ = lo_ == hi_ ? 0 : m_.sign_at(lo_);
    return false;
}

bool NumberField::is_zero(const RatPoly& p) {
    std::lock_guard lk(mu_);
    return is_zero_locked(p % m_);
}

void NumberField::refine_locked() {
    if (lo_ == hi_) return;
    Rational mid = (lo_ + hi_) / 2;
    int s = m_.sign_at(mid);
    if (s == 0) {
        lo_ = hi_ = mid;
        m_ = RatPoly(std::vector<Rational>{-mid, 1});
        sign_lo_ = 0;
    } else if (s == sign_lo_) {
        lo_ = mid;
    } else {
        hi_ = mid;
    }
}

Enclosure NumberField::enclose_locked(const RatPoly& p, unsigned bits) {
    Rational target(1);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits);
    while (true) {
        Enclosure e = p.eval(Enclosure{lo_, hi_});
        if (e.width() <= target || lo_ == hi_) return e;
        refine_locked();
    }
}

Enclosure NumberField::enclose(const RatPoly& p, unsigned bits) {
    std::lock_guard lk(mu_);
    return enclose_locked(p, bits);
}

int NumberField::sign(const RatPoly& p) {
    std::lock_guard lk(mu_);
    RatPoly r = p % m_;
    if (r.is_zero()) return 0;
    bool tested = false;
    for (unsigned bits = 8;; bits *= 2) {
        Enclosure e = enclose_locked(r, bits);
        if (sgn(e.lo) > 0) return 1;
        if (sgn(e.hi) < 0) return -1;
        if (!tested && bits >= 32) {
            if (is_zero_locked(r % m_)) return 0;
            tested = true;
            r = r % m_;
        }
        if (lo_ == hi_) return sgn(r.eval(lo_));
    }
}

RatPoly NumberField::inverse(const RatPoly& p) {
    std::lock_guard lk(mu_);
    RatPoly r = p % m_;
    if (is_zero_locked(r)) throw std::domain_error("inverse of zero in number field");
    while (true) {
        RatPoly s, t;
        RatPoly g = extended_gcd(r % m_, m_, s, t);
        if (g.degree() == 0) return s % m_;
        // g(theta) != 0 because g divides p, so theta lives in m/g.
        m_ = (m_ / g).monic();
        sign_lo_ = lo_ == hi_ ? 0 : m_.sign_at(lo_);
    }
}

bool NumberField::adopt_factor(const RatPoly& f) {
    std::lock_guard lk(mu_);
    if (f.degree() < 1 || f.degree() >= m_.degree()) return false;
    if (!(m_ % f).is_zero()) return false;
    RatPoly fm = f.monic();
    if (!theta_is_root_locked(fm)) return false;
    m_ = fm;
    sign_lo_ = lo_ == hi_ ? 0 : m_.sign_at(lo_);
    return true;
}

}  // namespace dbx
