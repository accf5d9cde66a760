#include "dbx/base_classify.hpp"

#include <algorithm>
#include <array>

namespace dbx {

namespace {
constexpr std::array<const char*, 13> label_names{"C", "I", "II", "III", "IV", "V", "VI",
                                                   "VII", "VIII", "IX", "X", "XI", "XII"};
}

std::string to_string(CaseLabel c) { return label_names[static_cast<size_t>(c)]; }

CaseLabel parse_case_label(std::string_view s) {
    for (size_t i = 0; i < label_names.size(); ++i)
        if (s == label_names[i]) return static_cast<CaseLabel>(i);
    throw ParseError("unknown case label: " + std::string(s));
}

std::string Verdict::to_string() const {
    switch (kind) {
        case Kind::Proven: return "Proven";
        case Kind::RefutedWitness: return "RefutedWitness(" + std::to_string(index) + ")";
        default: return "UndecidedAtDepth(" + std::to_string(index) + ")";
    }
}

std::string to_string(Subcase s) {
    return s == Subcase::NotClosed ? "U⊊closureU=V" : "U=closureU⊊V, discrete";
}

namespace {

void validate_periodic_profile(const PeriodicSeq& mu, const PeriodicSeq& alpha, Region region) {
    if (region == Region::OnC) {
        if (mu != PeriodicSeq::zeros() || alpha != PeriodicSeq::ones())
            throw InvariantViolation("profile on C must be (0^inf, 1^inf)");
        return;
    }
    if (alpha.digit(0) != 1 || mu.digit(0) != 0) throw InvariantViolation("alpha must start with 1 and mu with 0");
    for (const auto& t : alpha.tails())
        if (t > alpha) throw InvariantViolation("a shift of alpha exceeds alpha");
    for (const auto& t : mu.tails())
        if (t < mu) throw InvariantViolation("a shift of mu is below mu");
}

void validate_prefix_profile(const std::string& mu, const std::string& alpha, Region region) {
    if (region != Region::OnC && ((!alpha.empty() && alpha[0] != '1') || (!mu.empty() && mu[0] != '0')))
        throw InvariantViolation("alpha must start with 1 and mu with 0");
    for (size_t n = 1; n < alpha.size(); ++n)
        if (auto o = compare_known(std::string_view(alpha).substr(n), alpha); o && *o > 0)
            throw InvariantViolation("a shift of alpha exceeds alpha");
    for (size_t n = 1; n < mu.size(); ++n)
        if (auto o = compare_known(std::string_view(mu).substr(n), mu); o && *o < 0)
            throw InvariantViolation("a shift of mu is below mu");
}

}  // namespace

BaseProfile profile(const DoubleBase& Q, size_t depth_cap) {
    if (!Q.in_A()) throw DomainError("profile requires a base in region A");
    const BaseConstants& k = Q.constants();
    BaseProfile p{Q.region(), expansion_stream(Q, k.ell, ExpansionKind::QuasiLazy, depth_cap),
                  expansion_stream(Q, k.r, ExpansionKind::QuasiGreedy, depth_cap)};
    if (p.mu.is_periodic() && p.alpha.is_periodic()) {
        validate_periodic_profile(*p.mu.sequence(), *p.alpha.sequence(), p.region);
    } else {
        size_t n = std::min<size_t>(std::min(p.mu.known_length(), p.alpha.known_length()), depth_cap);
        validate_prefix_profile(p.mu.known_digits(n), p.alpha.known_digits(n), p.region);
    }
    return p;
}

CaseLabel classify_pair(const PeriodicSeq& mu, const PeriodicSeq& alpha) {
    // Shifts i >= 1 with the digit at position i (1-based).
    std::vector<std::pair<int, PeriodicSeq>> mu_tails, alpha_tails;
    for (size_t i = 1; i <= mu.preperiod().size() + mu.period().size(); ++i)
        mu_tails.emplace_back(mu.digit(i - 1), mu.shifted(i));
    for (size_t j = 1; j <= alpha.preperiod().size() + alpha.period().size(); ++j)
        alpha_tails.emplace_back(alpha.digit(j - 1), alpha.shifted(j));

    bool mu_above = false, mu_above_at0 = false;
    for (const auto& [d, t] : mu_tails)
        if (t > alpha) {
            mu_above = true;
            mu_above_at0 = mu_above_at0 || d == 0;
        }
    bool alpha_below = false, alpha_below_at1 = false;
    for (const auto& [d, t] : alpha_tails)
        if (t < mu) {
            alpha_below = true;
            alpha_below_at1 = alpha_below_at1 || d == 1;
        }
    if (mu_above != mu_above_at0 || alpha_below != alpha_below_at1)
        throw InvariantViolation("shift violation without the matching digit");
    if (mu_above && alpha_below) return CaseLabel::XII;
    if (mu_above) return CaseLabel::X;
    if (alpha_below) return CaseLabel::XI;

    auto any = [](const auto& tails, const PeriodicSeq& target) {
        return std::any_of(tails.begin(), tails.end(), [&](const auto& e) { return e.second == target; });
    };
    bool e1 = any(mu_tails, mu), e2 = any(mu_tails, alpha);
    bool e3 = any(alpha_tails, mu), e4 = any(alpha_tails, alpha);
    unsigned key = (e1 ? 1u : 0u) | (e2 ? 2u : 0u) | (e3 ? 4u : 0u) | (e4 ? 8u : 0u);
    switch (key) {
        case 0: return CaseLabel::I;
        case 4: return CaseLabel::II;
        case 2: return CaseLabel::III;
        case 8: return CaseLabel::IV;
        case 1: return CaseLabel::V;
        case 2 | 8: return CaseLabel::VI;
        case 1 | 4: return CaseLabel::VII;
        case 1 | 8: return CaseLabel::VIII;
        case 15: return CaseLabel::IX;
        default: throw InvariantViolation("equality pattern matches none of the cases");
    }
}

Classification classify_case(const BaseProfile& p) {
    if (p.mu.is_periodic() && p.alpha.is_periodic()) {
        if (p.region == Region::OnC) {
            validate_periodic_profile(*p.mu.sequence(), *p.alpha.sequence(), p.region);
            return {CaseLabel::C, Verdict::proven()};
        }
        return {classify_pair(*p.mu.sequence(), *p.alpha.sequence()), Verdict::proven()};
    }
    // Semi-decision on the known digits: strict violations of V carry a
    // witness index, everything else stays undecided.
    size_t depth = std::min(p.mu.known_length(), p.alpha.known_length());
    std::string mu = p.mu.known_digits(depth), alpha = p.alpha.known_digits(depth);
    std::optional<size_t> wi, wj;
    for (size_t i = 1; i < mu.size() && !wi; ++i)
        if (mu[i - 1] == '0')
            if (auto o = compare_known(std::string_view(mu).substr(i), alpha); o && *o > 0) wi = i;
    for (size_t j = 1; j < alpha.size() && !wj; ++j)
        if (alpha[j - 1] == '1')
            if (auto o = compare_known(mu, std::string_view(alpha).substr(j)); o && *o > 0) wj = j;
    if (wi && wj) return {CaseLabel::XII, Verdict::refuted(std::max(*wi, *wj))};
    if (wi) return {CaseLabel::X, Verdict::refuted(*wi)};
    if (wj) return {CaseLabel::XI, Verdict::refuted(*wj)};
    return {std::nullopt, Verdict::undecided(depth)};
}

BaseMembership base_membership(CaseLabel label) {
    auto i = static_cast<int>(label);
    return {i <= static_cast<int>(CaseLabel::I), i <= static_cast<int>(CaseLabel::VIII),
            i <= static_cast<int>(CaseLabel::IX)};
}

AuxProfile aux_profile(const PeriodicSeq& mu, const PeriodicSeq& alpha, CaseLabel label) {
    size_t bound = alpha.preperiod().size() + alpha.period().size() + mu.preperiod().size() + mu.period().size();
    if (label == CaseLabel::XI) {
        size_t n = 0;
        for (size_t k = 1; k <= bound && !n; ++k)
            if (alpha.shifted(k) < mu) n = k;
        if (!n) throw InvariantViolation("case XI pair without a shift of alpha below mu");
        if (alpha.digit(n - 1) != 1) throw InvariantViolation("minimal witness digit of alpha is not 1");
        PeriodicSeq ap("", alpha.prefix(n - 1) + "0");
        bool strict = true;
        for (const auto& t : mu.tails()) strict = strict && t < ap;
        for (const auto& t : ap.tails()) strict = strict && mu < t;
        bool ordering = ap < alpha;
        for (const auto& t : ap.tails()) ordering = ordering && mu <= t && t <= ap;
        return {ap, n, strict ? Subcase::NotClosed : Subcase::ClosedDiscrete, ordering};
    }
    if (label == CaseLabel::X) {
        size_t n = 0;
        for (size_t k = 1; k <= bound && !n; ++k)
            if (mu.shifted(k) > alpha) n = k;
        if (!n) throw InvariantViolation("case X pair without a shift of mu above alpha");
        if (mu.digit(n - 1) != 0) throw InvariantViolation("minimal witness digit of mu is not 0");
        PeriodicSeq mp("", mu.prefix(n - 1) + "1");
        bool strict = true;
        for (const auto& t : mp.tails()) strict = strict && t < alpha;
        for (const auto& t : alpha.tails()) strict = strict && mp < t;
        bool ordering = mu < mp;
        for (const auto& t : mp.tails()) ordering = ordering && mp <= t && t <= alpha;
        return {mp, n, strict ? Subcase::NotClosed : Subcase::ClosedDiscrete, ordering};
    }
    throw std::invalid_argument("auxiliary profiles exist only for cases X and XI");
}

AuxProfile aux_profile(const BaseProfile& p, CaseLabel label) {
    if (!p.mu.is_periodic() || !p.alpha.is_periodic()) throw UndecidableError("auxiliary profile needs certified sequences");
    return aux_profile(*p.mu.sequence(), *p.alpha.sequence(), label);
}

Table2Row topology_summary(CaseLabel label, std::optional<Subcase> subcase) {
    const std::string open = "U⊊closureU=V", closed_v = "U=closureU⊊V";
    const std::string either = "U=closureU⊊V or U⊊closureU⊊V";
    const std::string disjoint = "A_Q∩B_Q=∅", a_in_b = "A_Q⊊B_Q", b_in_a = "B_Q⊊A_Q";
    switch (label) {
        case CaseLabel::C: return {open, "A_Q=B_Q", "2", "2"};
        case CaseLabel::I: return {open, disjoint, "2", "2"};
        case CaseLabel::II: return {either, a_in_b, "3", "2 or 3"};
        case CaseLabel::III: return {either, b_in_a, "2 or 3", "3"};
        case CaseLabel::IV: return {open, disjoint, "ℵ0", "2"};
        case CaseLabel::V: return {open, disjoint, "2", "ℵ0"};
        case CaseLabel::VI: return {either, b_in_a, "ℵ0", "ℵ0"};
        case CaseLabel::VII: return {either, a_in_b, "ℵ0", "ℵ0"};
        case CaseLabel::VIII: return {open, disjoint, "ℵ0", "ℵ0"};
        case CaseLabel::IX: return {closed_v, "A_Q=B_Q", "ℵ0", "ℵ0"};
        case CaseLabel::X: {
            std::string inc = subcase ? to_string(*subcase) : open + " or " + closed_v;
            return {inc, b_in_a, "ℵ0 or 2", "B_Q=∅"};
        }
        case CaseLabel::XI: {
            std::string inc = subcase ? to_string(*subcase) : open + " or " + closed_v;
            return {inc, a_in_b, "A_Q=∅", "2 or ℵ0"};
        }
        default: return {"U=closureU=V", "A_Q=B_Q=∅", "A_Q=∅", "B_Q=∅"};
    }
}

}  // namespace dbx
