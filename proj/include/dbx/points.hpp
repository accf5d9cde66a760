#pragma once

#include "dbx/base_classify.hpp"
#include "dbx/count_result.hpp"

#include <vector>

namespace dbx {

struct Membership {
    bool value = false;
    Verdict verdict = Verdict::undecided(0);
    bool proven_true() const { return value && verdict.is_proven(); }
    bool proven_false() const { return !value && verdict.kind != Verdict::Kind::UndecidedAtDepth; }
};

struct PointClass {
    ExactScalar x;
    ExpansionResult b, a, m, l;  // greedy, quasi-greedy, quasi-lazy, lazy
    Membership in_U, in_V, in_A, in_B;
    CountResult count;
};

// The four expansions of x and its memberships in U_Q, V_Q, A_Q, B_Q.
// count is Exact(1) on U_Q and otherwise a lower bound from the distinct
// certified expansions; use count_expansions for the case-based count.
PointClass classify_point(const DoubleBase& Q, const BaseProfile& p, const ExactScalar& x, size_t depth_cap);
PointClass classify_point(const DoubleBase& Q, const ExactScalar& x, size_t depth_cap);

// Number of expansions of a point of V_Q \ U_Q from the case label.
// Throws DomainError when the point is in U_Q or outside V_Q, or when the
// memberships are not proven.
CountResult count_expansions(const BaseProfile& p, CaseLabel label, const PointClass& pc);

enum class Side { Greedy, Lazy };

// Expansions strictly between a(x) and b(x) (Side::Greedy, x in A_Q) or
// between l(x) and m(x) (Side::Lazy, x in B_Q). Empty when alpha (mu) is
// not purely periodic or is 1^inf (0^inf).
std::vector<PeriodicSeq> between_expansions(const DoubleBase& Q, const BaseProfile& p, const PointClass& pc, size_t N,
                                            Side side = Side::Greedy);

struct Gap {
    ExactScalar x_left, x_right;
    PeriodicSeq b_left;   // finite greedy expansion of x_left
    PeriodicSeq l_right;  // co-finite lazy expansion of x_right
    PeriodicSeq a_left;   // quasi-greedy expansion of x_left from the stream
    PeriodicSeq m_right;  // quasi-lazy expansion of x_right from the stream
};

// Gap of J_Q \ V_Q whose left end has greedy expansion bL, for a base of
// V_Q off C. Throws std::invalid_argument when the base is not such a base
// or bL is not a finite greedy sequence with value in A_Q,
// InvariantViolation when the endpoint expansions disagree.
Gap gap_partner(const DoubleBase& Q, const BaseProfile& p, const PeriodicSeq& b_left, size_t depth_cap);

// Gaps indexed by finite greedy words of length <= max_word_len, sorted by
// left end.
std::vector<Gap> gaps_enumerate(const DoubleBase& Q, const BaseProfile& p, size_t max_word_len, size_t depth_cap);

// Greedy admissibility of a certified sequence: sigma^n(s) < alpha
// whenever s_n = 0.
bool greedy_admissible(const PeriodicSeq& s, const PeriodicSeq& alpha);

// Next point of the increasing sequence inside a component, case IX only.
PointClass next_in_component(const DoubleBase& Q, const BaseProfile& p, CaseLabel label, const PointClass& pc,
                             size_t depth_cap);

}  // namespace dbx
