#include "dbx/points.hpp"

#include <algorithm>
#include <set>

namespace dbx {

namespace {

// First position where the known digits of two expansions differ.
std::optional<size_t> first_difference(const ExpansionResult& x, const ExpansionResult& y) {
    size_t n = std::min(x.known_length(), y.known_length());
    if (n == SIZE_MAX) n = 0;
    std::string dx = x.known_digits(n), dy = y.known_digits(n);
    for (size_t i = 0; i < std::min(dx.size(), dy.size()); ++i)
        if (dx[i] != dy[i]) return i;
    return std::nullopt;
}

size_t known_depth(std::initializer_list<const ExpansionResult*> xs) {
    size_t d = SIZE_MAX;
    for (auto* x : xs) d = std::min(d, x->known_length());
    return d;
}

// Defining conditions of V_Q on certified m(x), a(x). Returns the 1-based
// index of a violation, if any.
std::optional<size_t> v_violation(const PeriodicSeq& m, const PeriodicSeq& a, const PeriodicSeq& mu,
                                  const PeriodicSeq& alpha) {
    for (size_t j = 1; j <= m.preperiod().size() + m.period().size(); ++j)
        if (m.digit(j - 1) == 0 && m.shifted(j) > alpha) return j;
    for (size_t j = 1; j <= a.preperiod().size() + a.period().size(); ++j)
        if (a.digit(j - 1) == 1 && a.shifted(j) < mu) return j;
    return std::nullopt;
}

// The same conditions on known digits only; a violation is a witness.
std::optional<size_t> v_violation_known(const std::string& m, const std::string& a, const std::string& mu,
                                        const std::string& alpha) {
    for (size_t j = 1; j < m.size(); ++j)
        if (m[j - 1] == '0')
            if (auto o = compare_known(std::string_view(m).substr(j), alpha); o && *o > 0) return j;
    for (size_t j = 1; j < a.size(); ++j)
        if (a[j - 1] == '1')
            if (auto o = compare_known(std::string_view(a).substr(j), mu); o && *o < 0) return j;
    return std::nullopt;
}

Membership membership_from(const Membership& v, const ExpansionResult& e, SeqClass wanted) {
    if (v.proven_false()) return {false, v.verdict};
    if (!v.proven_true()) return {false, v.verdict};
    if (auto* s = e.sequence()) return {s->classify() == wanted, Verdict::proven()};
    return {false, Verdict::undecided(e.known_length())};
}

}  // namespace

PointClass classify_point(const DoubleBase& Q, const BaseProfile& p, const ExactScalar& x, size_t depth_cap) {
    PointClass pc{x,
                  expansion_stream(Q, x, ExpansionKind::Greedy, depth_cap),
                  expansion_stream(Q, x, ExpansionKind::QuasiGreedy, depth_cap),
                  expansion_stream(Q, x, ExpansionKind::QuasiLazy, depth_cap),
                  expansion_stream(Q, x, ExpansionKind::Lazy, depth_cap),
                  {},
                  {},
                  {},
                  {},
                  {}};

    if (pc.b.is_periodic() && pc.l.is_periodic()) {
        pc.in_U = {*pc.b.sequence() == *pc.l.sequence(), Verdict::proven()};
    } else if (auto i = first_difference(pc.b, pc.l)) {
        pc.in_U = {false, Verdict::refuted(*i + 1)};
    } else {
        pc.in_U = {false, Verdict::undecided(known_depth({&pc.b, &pc.l}))};
    }

    if (Q.on_C()) {
        pc.in_V = {true, Verdict::proven()};
    } else if (pc.m.is_periodic() && pc.a.is_periodic() && p.mu.is_periodic() && p.alpha.is_periodic()) {
        auto j = v_violation(*pc.m.sequence(), *pc.a.sequence(), *p.mu.sequence(), *p.alpha.sequence());
        pc.in_V = j ? Membership{false, Verdict::refuted(*j)} : Membership{true, Verdict::proven()};
    } else {
        size_t n = std::min(known_depth({&pc.m, &pc.a, &p.mu, &p.alpha}), depth_cap);
        auto j = v_violation_known(pc.m.known_digits(n), pc.a.known_digits(n), p.mu.known_digits(n),
                                   p.alpha.known_digits(n));
        bool interior = compare(x, ExactScalar(0)) == Ordering::Greater &&
                        compare(x, Q.constants().j_max) == Ordering::Less;
        // Off C, x in V iff a(x) = m(x) for interior x.
        if (!j && interior)
            if (auto i = first_difference(pc.a, pc.m)) j = *i + 1;
        pc.in_V = j ? Membership{false, Verdict::refuted(*j)} : Membership{false, Verdict::undecided(n)};
    }

    pc.in_A = membership_from(pc.in_V, pc.b, SeqClass::Finite);
    pc.in_B = membership_from(pc.in_V, pc.l, SeqClass::CoFinite);

    if (pc.in_U.proven_true()) {
        pc.count = CountResult::exact(1);
    } else {
        std::set<std::string> distinct;
        for (auto* e : {&pc.b, &pc.a, &pc.m, &pc.l})
            if (auto* s = e->sequence()) distinct.insert(s->literal());
        pc.count = CountResult::at_least(distinct.size(), depth_cap);
    }
    return pc;
}

PointClass classify_point(const DoubleBase& Q, const ExactScalar& x, size_t depth_cap) {
    return classify_point(Q, profile(Q, depth_cap), x, depth_cap);
}

CountResult count_expansions(const BaseProfile& p, CaseLabel label, const PointClass& pc) {
    if (pc.in_U.proven_true()) throw DomainError("point has a unique expansion");
    if (pc.in_V.proven_false()) throw DomainError("point lies outside V_Q; use the oracle");
    if (!pc.in_V.proven_true() || !pc.in_U.verdict.is_proven() || !pc.in_A.verdict.is_proven() ||
        !pc.in_B.verdict.is_proven())
        throw DomainError("point memberships are not proven");
    bool in_a = pc.in_A.value, in_b = pc.in_B.value;
    if (!in_a && !in_b) throw InvariantViolation("point of V_Q \\ U_Q in neither A_Q nor B_Q");
    auto two = CountResult::exact(2), three = CountResult::exact(3), inf = CountResult::countably_infinite();
    switch (label) {
        case CaseLabel::C:
        case CaseLabel::I: return two;
        case CaseLabel::II: return in_a ? three : two;
        case CaseLabel::III: return in_b ? three : two;
        case CaseLabel::IV: return in_a ? inf : two;
        case CaseLabel::V: return in_b ? inf : two;
        case CaseLabel::VI:
        case CaseLabel::VII:
        case CaseLabel::VIII:
        case CaseLabel::IX: return inf;
        case CaseLabel::X: {
            auto* alpha = p.alpha.sequence();
            if (!alpha) throw UndecidableError("alpha(Q) is not certified");
            return alpha->purely_periodic() ? inf : two;
        }
        case CaseLabel::XI: {
            auto* mu = p.mu.sequence();
            if (!mu) throw UndecidableError("mu(Q) is not certified");
            return mu->purely_periodic() ? inf : two;
        }
        default: throw InvariantViolation("V_Q \\ U_Q is empty in case XII");
    }
}

std::vector<PeriodicSeq> between_expansions(const DoubleBase& Q, const BaseProfile& p, const PointClass& pc, size_t N,
                                            Side side) {
    bool greedy = side == Side::Greedy;
    const Membership& in = greedy ? pc.in_A : pc.in_B;
    if (!in.proven_true()) throw DomainError(greedy ? "point is not in A_Q" : "point is not in B_Q");
    const PeriodicSeq* tail = greedy ? p.alpha.sequence() : p.mu.sequence();
    const PeriodicSeq* end = greedy ? pc.b.sequence() : pc.l.sequence();
    if (!tail || !end) throw UndecidableError("profile or expansion not certified");
    if (!tail->purely_periodic() || *tail == (greedy ? PeriodicSeq::ones() : PeriodicSeq::zeros())) return {};
    size_t k = tail->period().size();
    std::string w = end->preperiod();
    w.pop_back();
    // c^N = w (0 alpha_1..alpha_{k-1})^N 1 0^inf, or its mirror.
    std::string block = (greedy ? "0" : "1") + tail->period().substr(0, k - 1);
    std::vector<PeriodicSeq> out;
    std::string body = w;
    for (size_t n = 1; n <= N; ++n) {
        body += block;
        PeriodicSeq c = greedy ? PeriodicSeq(body + "1", "0") : PeriodicSeq(body + "0", "1");
        if (compare(pi_eval(Q, c), pc.x) != Ordering::Equal)
            throw InvariantViolation("intermediate expansion does not evaluate to x");
        out.push_back(std::move(c));
    }
    return out;
}

bool greedy_admissible(const PeriodicSeq& s, const PeriodicSeq& alpha) {
    for (size_t n = 1; n <= s.preperiod().size() + s.period().size(); ++n)
        if (s.digit(n - 1) == 0 && !(s.shifted(n) < alpha)) return false;
    return true;
}

namespace {

Gap gap_from(const DoubleBase& Q, const BaseProfile& p, const PeriodicSeq& b_left, const PointClass& left,
             size_t depth_cap) {
    std::string w = b_left.preperiod();
    w.pop_back();
    PeriodicSeq l_right(w + "0", "1");
    ExactScalar x_right = pi_eval(Q, l_right);
    ExpansionResult m = expansion_stream(Q, x_right, ExpansionKind::QuasiLazy, depth_cap);
    const PeriodicSeq *a = left.a.sequence(), *mseq = m.sequence();
    if (!a || !mseq) throw UndecidableError("gap endpoint expansions not certified");
    if (*a != p.alpha.sequence()->prepended(w + "0")) throw InvariantViolation("a(x_L) is not w0 alpha");
    if (*mseq != p.mu.sequence()->prepended(w + "1")) throw InvariantViolation("m(x_R) is not w1 mu");
    return {left.x, x_right, b_left, l_right, *a, *mseq};
}

void require_certified(const BaseProfile& p) {
    if (!p.mu.is_periodic() || !p.alpha.is_periodic()) throw UndecidableError("profile not certified");
}

// Gaps exist for bases of V off the curve C.
void require_gapped(const BaseProfile& p) {
    require_certified(p);
    auto c = classify_case(p);
    if (!c.label || *c.label == CaseLabel::C || !base_membership(*c.label).in_V)
        throw std::invalid_argument("gaps need a base in V off the curve C");
}

}  // namespace

Gap gap_partner(const DoubleBase& Q, const BaseProfile& p, const PeriodicSeq& b_left, size_t depth_cap) {
    require_gapped(p);
    if (b_left.classify() != SeqClass::Finite) throw std::invalid_argument("gap word must be finite");
    if (!greedy_admissible(b_left, *p.alpha.sequence())) throw std::invalid_argument("word is not greedy");
    ExactScalar x_left = pi_eval(Q, b_left);
    PointClass left = classify_point(Q, p, x_left, depth_cap);
    if (!left.in_A.proven_true()) throw std::invalid_argument("left endpoint is not in A_Q");
    return gap_from(Q, p, b_left, left, depth_cap);
}

std::vector<Gap> gaps_enumerate(const DoubleBase& Q, const BaseProfile& p, size_t max_word_len, size_t depth_cap) {
    require_gapped(p);
    std::vector<Gap> gaps;
    for (size_t len = 1; len <= max_word_len; ++len) {
        for (size_t bits = 0; bits < (size_t{1} << (len - 1)); ++bits) {
            std::string w;
            for (size_t i = len - 1; i-- > 0;) w.push_back((bits >> i) & 1 ? '1' : '0');
            w.push_back('1');
            PeriodicSeq s(w, "0");
            if (!greedy_admissible(s, *p.alpha.sequence())) continue;
            ExactScalar x = pi_eval(Q, s);
            PointClass pc = classify_point(Q, p, x, depth_cap);
            if (!pc.in_A.proven_true()) continue;
            gaps.push_back(gap_from(Q, p, s, pc, depth_cap));
        }
    }
    std::sort(gaps.begin(), gaps.end(),
              [](const Gap& g, const Gap& h) { return compare(g.x_left, h.x_left) == Ordering::Less; });
    return gaps;
}

PointClass next_in_component(const DoubleBase& Q, const BaseProfile& p, CaseLabel label, const PointClass& pc,
                             size_t depth_cap) {
    if (label != CaseLabel::IX) throw std::invalid_argument("component sequences are defined for case IX");
    require_certified(p);
    if (!pc.in_V.proven_true() || !pc.in_U.proven_false()) throw std::invalid_argument("point is not in V_Q \\ U_Q");
    const PeriodicSeq* b = pc.b.sequence();
    if (!b || b->classify() != SeqClass::Finite) throw std::invalid_argument("greedy expansion is not finite");
    PeriodicSeq target = p.mu.sequence()->prepended(b->preperiod());
    ExactScalar x = pi_eval(Q, target);
    PointClass next = classify_point(Q, p, x, depth_cap);
    if (compare(x, pc.x) != Ordering::Greater) throw InvariantViolation("component sequence is not increasing");
    if (!next.in_V.proven_true() || !next.in_U.proven_false()) throw InvariantViolation("next point left V_Q \\ U_Q");
    if (!next.a.sequence() || *next.a.sequence() != target) throw InvariantViolation("quasi-greedy expansion mismatch");
    next.count = count_expansions(p, label, next);
    return next;
}

}  // namespace dbx
