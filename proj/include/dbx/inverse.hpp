#pragma once

#include "dbx/base_classify.hpp"

#include <stdexcept>
#include <vector>

namespace dbx {

struct ProfileSpec {
    PeriodicSeq mu, alpha;
};

// Necessary conditions for (mu, alpha) to be the profile of a base in A:
// first digits and the shift inequalities over every tail class.
Verdict check_admissible(const ProfileSpec& spec);

struct NoSolutionFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolvedBase {
    DoubleBase base;
    double q0_approx, q1_approx;
    double residual_alpha, residual_mu;  // pi(alpha) - r_Q and pi(mu) - ell_Q
    bool exact;
    BaseProfile forward;
    bool reproduces;
};

struct SolveResult {
    bool on_curve_c = false;  // (0^inf, 1^inf): every point of C solves
    std::vector<SolvedBase> roots;
    bool ambiguous = false;
};

// Solves pi_Q(alpha) = r_Q, pi_Q(mu) = ell_Q for Q in A with q0, q1 in
// (1, 8]. Roots are made exact and kept only when the forward profile
// reproduces the input. Throws std::invalid_argument for inadmissible
// input and NoSolutionFound when no root is certified.
SolveResult solve_base(const ProfileSpec& spec, double tol = 1e-12, size_t depth = 64);

}  // namespace dbx
