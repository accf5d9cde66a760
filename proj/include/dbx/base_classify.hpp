#pragma once

#include "dbx/expansions.hpp"

#include <optional>
#include <string>

namespace dbx {

enum class CaseLabel { C, I, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII };

std::string to_string(CaseLabel c);
CaseLabel parse_case_label(std::string_view s);

struct Verdict {
    enum class Kind { Proven, RefutedWitness, UndecidedAtDepth };
    Kind kind = Kind::Proven;
    size_t index = 0;  // witness index or depth

    static Verdict proven() { return {Kind::Proven, 0}; }
    static Verdict refuted(size_t i) { return {Kind::RefutedWitness, i}; }
    static Verdict undecided(size_t depth) { return {Kind::UndecidedAtDepth, depth}; }
    bool is_proven() const { return kind == Kind::Proven; }
    std::string to_string() const;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct BaseProfile {
    Region region;
    ExpansionResult mu;     // quasi-lazy expansion of ell_Q
    ExpansionResult alpha;  // quasi-greedy expansion of r_Q
};

// Throws InvariantViolation when a certified profile breaks the known
// structure (first digits, shift inequalities, the C profile).
BaseProfile profile(const DoubleBase& Q, size_t depth_cap);

struct Classification {
    std::optional<CaseLabel> label;  // empty only for UndecidedAtDepth
    Verdict verdict;
};

Classification classify_case(const BaseProfile& p);
// Case of a certified pair; never returns C. Throws InvariantViolation when
// the pair satisfies none or several of the twelve conditions.
CaseLabel classify_pair(const PeriodicSeq& mu, const PeriodicSeq& alpha);

struct BaseMembership {
    bool in_U, in_closure_U, in_V;
};
BaseMembership base_membership(CaseLabel label);

enum class Subcase { NotClosed, ClosedDiscrete };
std::string to_string(Subcase s);  // the topology it implies

struct AuxProfile {
    PeriodicSeq derived;  // alpha' for XI, mu' for X
    size_t n;             // the minimal witness index
    Subcase subcase;
    bool ordering_holds;  // mu <= sigma^i(alpha') <= alpha' < alpha, or its mirror
};
AuxProfile aux_profile(const PeriodicSeq& mu, const PeriodicSeq& alpha, CaseLabel label);
AuxProfile aux_profile(const BaseProfile& p, CaseLabel label);

struct Table2Row {
    std::string inclusions;
    std::string ab_relation;
    std::string count_a;
    std::string count_b;
};
// The topology row for a case. For X and XI a subcase picks the matching
// alternative of the inclusions column.
Table2Row topology_summary(CaseLabel label, std::optional<Subcase> subcase = std::nullopt);

}  // namespace dbx
