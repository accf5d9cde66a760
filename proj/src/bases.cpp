#include "dbx/bases.hpp"

namespace dbx {

std::string to_string(Region r) {
    switch (r) {
        case Region::OnC: return "OnC";
        case Region::InteriorA: return "InteriorA";
        default: return "OutsideA";
    }
}

namespace {

Region compute_region(const ExactScalar& q0, const ExactScalar& q1) {
    switch (compare(q0 + q1, q0 * q1)) {
        case Ordering::Equal: return Region::OnC;
        case Ordering::Greater: return Region::InteriorA;
        case Ordering::Less: return Region::OutsideA;
        default: throw UndecidableError("region of the base cannot be decided");
    }
}

}  // namespace

DoubleBase::DoubleBase(ExactScalar q0, ExactScalar q1) : q_{std::move(q0), std::move(q1)} {
    for (const auto& q : q_) {
        Ordering o = compare(q, ExactScalar(1));
        if (o == Ordering::Undecidable) throw UndecidableError("cannot decide whether base exceeds 1");
        if (o != Ordering::Greater) throw DomainError("bases must exceed 1");
    }
    region_ = compute_region(q_[0], q_[1]);
    const ExactScalar one(1);
    ExactScalar q1m = q_[1] - one;
    k_.r = q_[0] / q_[1];
    k_.j_max = one / q1m;
    k_.greedy_cut = one / q_[1];
    k_.lazy_cut = one / (q_[0] * q1m);
    k_.ell = q_[1] / (q_[0] * q1m) - one;
}

std::string DoubleBase::to_string() const { return "(" + q_[0].to_string() + ", " + q_[1].to_string() + ")"; }

Region region(const DoubleBase& Q) { return Q.region(); }

ExactScalar pi_word(const DoubleBase& Q, std::string_view word, const ExactScalar& tail) {
    ExactScalar v = tail;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int d = *it - '0';
        v = (ExactScalar(d) + v) / Q.q(d);
    }
    return v;
}

ExactScalar pi_eval(const DoubleBase& Q, const PeriodicSeq& s) {
    // P = pi(per 0^inf) + W * P with W the product of 1/q over one period.
    const std::string& per = s.period();
    ExactScalar tail;
    if (per == "0") {
        tail = 0;
    } else if (per == "1") {
        tail = Q.constants().j_max;
    } else {
        ExactScalar head = pi_word(Q, per, ExactScalar(0));
        ExactScalar w(1);
        for (char c : per) w = w / Q.q(c - '0');
        tail = head / (ExactScalar(1) - w);
    }
    return pi_word(Q, s.preperiod(), tail);
}

PiBounds pi_bounds(const DoubleBase& Q, const DigitPrefix& p) {
    ExactScalar lo = pi_word(Q, p.digits, ExactScalar(0));
    ExactScalar hi = pi_word(Q, p.digits, Q.constants().j_max);
    return {lo, hi};
}

}  // namespace dbx
