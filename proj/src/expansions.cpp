#include "dbx/expansions.hpp"

#include <climits>
#include <cstdint>

namespace dbx {

std::string to_string(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::Greedy: return "greedy";
        case ExpansionKind::QuasiGreedy: return "quasi-greedy";
        case ExpansionKind::Lazy: return "lazy";
        default: return "quasi-lazy";
    }
}

ExpansionKind parse_expansion_kind(std::string_view s) {
    if (s == "greedy") return ExpansionKind::Greedy;
    if (s == "quasi-greedy" || s == "quasigreedy") return ExpansionKind::QuasiGreedy;
    if (s == "lazy") return ExpansionKind::Lazy;
    if (s == "quasi-lazy" || s == "quasilazy") return ExpansionKind::QuasiLazy;
    throw ParseError("unknown expansion kind: " + std::string(s));
}

std::string to_string(TruncationReason r) {
    return r == TruncationReason::DepthCap ? "DepthCap" : "UndecidableComparison";
}

ExpansionResult ExpansionResult::certified(PeriodicSeq s) {
    size_t start = s.preperiod().size(), len = s.period().size();
    return PeriodicExpansion{std::move(s), start, len};
}

const PeriodicSeq* ExpansionResult::sequence() const {
    if (auto* p = std::get_if<PeriodicExpansion>(&v_)) return &p->seq;
    return nullptr;
}

std::string ExpansionResult::known_digits(size_t n) const {
    if (auto* p = std::get_if<PeriodicExpansion>(&v_)) return p->seq.prefix(n);
    const auto& d = std::get<PrefixExpansion>(v_).prefix.digits;
    return d.substr(0, std::min(n, d.size()));
}

size_t ExpansionResult::known_length() const {
    if (is_periodic()) return SIZE_MAX;
    return prefix_only().prefix.depth();
}

std::string ExpansionResult::literal() const {
    if (auto* p = std::get_if<PeriodicExpansion>(&v_)) return p->seq.literal();
    return std::get<PrefixExpansion>(v_).prefix.digits + "...";
}

ExpansionStream::ExpansionStream(const DoubleBase& Q, ExactScalar x, ExpansionKind kind)
    : Q_(Q), s_(std::move(x)), kind_(kind) {}

std::optional<int> ExpansionStream::next() {
    const BaseConstants& k = Q_.constants();
    int d;
    switch (kind_) {
        case ExpansionKind::Greedy:
        case ExpansionKind::QuasiGreedy: {
            Ordering o = compare(s_, k.greedy_cut);
            if (o == Ordering::Undecidable) return std::nullopt;
            d = (o == Ordering::Greater || (o == Ordering::Equal && kind_ == ExpansionKind::Greedy)) ? 1 : 0;
            break;
        }
        default: {
            Ordering o = compare(s_, k.lazy_cut);
            if (o == Ordering::Undecidable) return std::nullopt;
            d = (o == Ordering::Less || (o == Ordering::Equal && kind_ == ExpansionKind::Lazy)) ? 0 : 1;
            break;
        }
    }
    s_ = Q_.q(d) * s_ - ExactScalar(d);
    ++n_;
    return d;
}

namespace {

void check_domain(const DoubleBase& Q, const ExactScalar& x) {
    if (!Q.in_A()) throw DomainError("base lies outside region A");
    Ordering lo = compare(x, ExactScalar(0)), hi = compare(x, Q.constants().j_max);
    if (lo == Ordering::Less || hi == Ordering::Greater) throw DomainError("x lies outside J_Q");
}

}  // namespace

ExpansionResult expansion_stream(const DoubleBase& Q, const ExactScalar& x, ExpansionKind kind, size_t depth_cap) {
    check_domain(Q, x);
    // Endpoint conventions a(0) = 1^inf and m(1/(q1-1)) = 0^inf.
    if (kind == ExpansionKind::QuasiGreedy && compare(x, ExactScalar(0)) == Ordering::Equal)
        return ExpansionResult::certified(PeriodicSeq::ones());
    if (kind == ExpansionKind::QuasiLazy && compare(x, Q.constants().j_max) == Ordering::Equal)
        return ExpansionResult::certified(PeriodicSeq::zeros());

    ExpansionStream st(Q, x, kind);
    ScalarSet seen;
    std::string digits;
    bool exact = x.is_exact() && Q.exact();
    if (exact) seen.insert(x);
    while (digits.size() < depth_cap) {
        auto d = st.next();
        if (!d) return PrefixExpansion{{digits}, TruncationReason::UndecidableComparison};
        digits.push_back(static_cast<char>('0' + *d));
        if (!exact) continue;
        // seen[i] is the state before digit i.
        if (auto j = seen.find(st.state())) {
            size_t start = *j, len = digits.size() - *j;
            PeriodicSeq seq(digits.substr(0, start), digits.substr(start));
            return PeriodicExpansion{std::move(seq), start, len};
        }
        seen.insert(st.state());
    }
    return PrefixExpansion{{digits}, TruncationReason::DepthCap};
}

PeriodicSeq to_quasi_greedy(const PeriodicSeq& b, const ExpansionResult& alpha) {
    SeqClass c = b.classify();
    if (c != SeqClass::Finite) return b;
    const PeriodicSeq* a = alpha.sequence();
    if (!a) throw UndecidableError("alpha(Q) is only known as a prefix");
    std::string head = b.preperiod();
    head.back() = '0';
    return a->prepended(head);
}

PeriodicSeq to_quasi_lazy(const PeriodicSeq& l, const ExpansionResult& mu) {
    SeqClass c = l.classify();
    if (c != SeqClass::CoFinite) return l;
    const PeriodicSeq* m = mu.sequence();
    if (!m) throw UndecidableError("mu(Q) is only known as a prefix");
    std::string head = l.preperiod();
    head.back() = '1';
    return m->prepended(head);
}

}  // namespace dbx
