#pragma once

#include "dbx/count_result.hpp"
#include "dbx/expansions.hpp"

#include <vector>

namespace dbx {

// Result of the brute-force exploration of all expansions of x.
struct Census {
    std::vector<PeriodicSeq> certified;  // distinct expansions found, capped
    size_t open_branches = 0;            // states left unexpanded
    bool branching_cycle_found = false;  // a cycle with a feasible exit
    bool continuum_found = false;        // two distinct cycles through one state
    bool complete = false;               // every reachable state expanded
    std::optional<size_t> path_count;    // number of expansions, when finite and complete
    size_t states = 0;
    size_t depth_cap = 0;
};

// Digit d is feasible at s iff 0 <= q_d s - d <= 1/(q1-1). States are
// explored breadth first and merged by exact equality, up to depth_cap
// levels and max_states distinct states. Throws DomainError for interval
// data, x outside J_Q or Q outside A.
Census enumerate_expansions(const DoubleBase& Q, const ExactScalar& x, size_t depth_cap, size_t max_states = 4096);

CountResult count_oracle(const Census& c);

// Expansions of x lexicographically strictly between lo and hi, searched
// to the given depth. A witness prefix already lies strictly between both
// bounds; ties are prefixes still equal to lo or hi at the depth limit.
struct BetweenSearch {
    std::vector<std::string> witnesses;
    size_t ties = 0;
};
BetweenSearch expansions_between(const DoubleBase& Q, const ExactScalar& x, const PeriodicSeq& lo,
                                 const PeriodicSeq& hi, size_t depth);

}  // namespace dbx
