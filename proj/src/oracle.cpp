#include "dbx/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

namespace dbx {

namespace {

constexpr size_t max_certificates = 64;

void check_exact_domain(const DoubleBase& Q, const ExactScalar& x) {
    if (!Q.in_A()) throw DomainError("base lies outside region A");
    if (!Q.exact() || !x.is_exact()) throw DomainError("the oracle needs exact data");
    if (compare(x, ExactScalar(0)) == Ordering::Less || compare(x, Q.constants().j_max) == Ordering::Greater)
        throw DomainError("x lies outside J_Q");
}

std::optional<ExactScalar> step(const DoubleBase& Q, const ExactScalar& s, int d) {
    ExactScalar t = Q.q(d) * s - ExactScalar(d);
    if (compare(t, ExactScalar(0)) == Ordering::Less) return std::nullopt;
    if (compare(t, Q.constants().j_max) == Ordering::Greater) return std::nullopt;
    return t;
}

struct Graph {
    // succ[v][d] is the state after digit d, or -1.
    std::vector<std::array<long, 2>> succ;
    std::vector<bool> expanded;
};

// Tarjan's algorithm; returns the component id of every node.
std::vector<long> components(const Graph& g, long& count) {
    size_t n = g.succ.size();
    std::vector<long> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on(n, false);
    std::vector<long> stack;
    long next = 0;
    count = 0;
    // Iterative to survive long chains.
    for (size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<long, int>> work{{static_cast<long>(root), 0}};
        while (!work.empty()) {
            auto& [v, d] = work.back();
            if (d == 0 && index[v] < 0) {
                index[v] = low[v] = next++;
                stack.push_back(v);
                on[v] = true;
            }
            bool pushed = false;
            while (d < 2) {
                long w = g.succ[v][d++];
                if (w < 0) continue;
                if (index[w] < 0) {
                    work.push_back({w, 0});
                    pushed = true;
                    break;
                }
                if (on[w]) low[v] = std::min(low[v], index[w]);
            }
            if (pushed) continue;
            long v_done = v;
            if (low[v_done] == index[v_done]) {
                long w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = false;
                    comp[w] = count;
                } while (w != v_done);
                ++count;
            }
            work.pop_back();
            if (!work.empty()) {
                long u = work.back().first;
                low[u] = std::min(low[u], low[v_done]);
            }
        }
    }
    return comp;
}

}  // namespace

Census enumerate_expansions(const DoubleBase& Q, const ExactScalar& x, size_t depth_cap, size_t max_states) {
    check_exact_domain(Q, x);
    Census c;
    c.depth_cap = depth_cap;

    ScalarSet states;
    Graph g;
    std::vector<size_t> level;
    states.insert(x);
    g.succ.push_back({-1, -1});
    g.expanded.push_back(false);
    level.push_back(0);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        if (level[v] >= depth_cap || states.size() >= max_states) continue;
        g.expanded[v] = true;
        for (int d = 0; d < 2; ++d) {
            auto t = step(Q, states[v], d);
            if (!t) continue;
            size_t w;
            if (auto j = states.find(*t)) {
                w = *j;
            } else {
                w = states.insert(*t);
                g.succ.push_back({-1, -1});
                g.expanded.push_back(false);
                level.push_back(level[v] + 1);
                queue.push_back(w);
            }
            g.succ[v][d] = static_cast<long>(w);
        }
    }
    size_t n = g.succ.size();
    c.states = n;
    c.open_branches = static_cast<size_t>(std::count(g.expanded.begin(), g.expanded.end(), false));
    c.complete = c.open_branches == 0;

    long ncomp = 0;
    std::vector<long> comp = components(g, ncomp);
    std::vector<size_t> size(ncomp, 0), internal(ncomp, 0);
    std::vector<bool> exits(ncomp, false);
    for (size_t v = 0; v < n; ++v) {
        ++size[comp[v]];
        for (long w : g.succ[v]) {
            if (w < 0) continue;
            if (comp[w] == comp[v]) ++internal[comp[v]];
            else exits[comp[v]] = true;
        }
    }
    // A component is cyclic when it has an internal edge. Every state of
    // J_Q has a feasible digit, so each exit continues to an expansion.
    for (long k = 0; k < ncomp; ++k) {
        if (internal[k] == 0) continue;
        if (internal[k] > size[k]) c.continuum_found = true;
        else if (exits[k]) c.branching_cycle_found = true;
    }

    if (c.complete && !c.continuum_found && !c.branching_cycle_found) {
        // Components are numbered in reverse topological order.
        std::vector<size_t> paths(ncomp, 0);
        std::vector<std::vector<size_t>> members(ncomp);
        for (size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
        for (long k = 0; k < ncomp; ++k) {
            if (internal[k] > 0) {
                paths[k] = 1;
                continue;
            }
            size_t v = members[k][0];
            for (long w : g.succ[v])
                if (w >= 0) paths[k] += paths[comp[w]];
        }
        c.path_count = paths[comp[0]];
    }

    // Certificates: every path of the state graph that closes on itself.
    std::vector<long> pos(n, -1);
    std::string digits;
    size_t budget = 1 << 16;
    std::function<void(size_t)> dfs = [&](size_t v) {
        if (c.certified.size() >= max_certificates || budget == 0) return;
        --budget;
        if (pos[v] >= 0) {
            c.certified.emplace_back(digits.substr(0, pos[v]), digits.substr(pos[v]));
            return;
        }
        if (!g.expanded[v]) return;
        pos[v] = static_cast<long>(digits.size());
        for (int d = 0; d < 2; ++d) {
            if (g.succ[v][d] < 0) continue;
            digits.push_back(static_cast<char>('0' + d));
            dfs(static_cast<size_t>(g.succ[v][d]));
            digits.pop_back();
        }
        pos[v] = -1;
    };
    dfs(0);
    std::sort(c.certified.begin(), c.certified.end());
    c.certified.erase(std::unique(c.certified.begin(), c.certified.end()), c.certified.end());
    return c;
}

CountResult count_oracle(const Census& c) {
    if (c.continuum_found) return CountResult::continuum();
    if (c.complete && c.branching_cycle_found) return CountResult::countably_infinite();
    if (c.complete && c.path_count) return CountResult::exact(*c.path_count);
    return CountResult::at_least(c.certified.size(), c.depth_cap);
}

BetweenSearch expansions_between(const DoubleBase& Q, const ExactScalar& x, const PeriodicSeq& lo,
                                 const PeriodicSeq& hi, size_t depth) {
    check_exact_domain(Q, x);
    BetweenSearch out;
    std::string digits;
    // above: the prefix already exceeds lo; below: it is already under hi.
    std::function<void(const ExactScalar&, bool, bool)> dfs = [&](const ExactScalar& s, bool above, bool below) {
        if (above && below) {
            out.witnesses.push_back(digits);
            return;
        }
        if (digits.size() >= depth) {
            ++out.ties;
            return;
        }
        size_t n = digits.size();
        for (int d = 0; d < 2; ++d) {
            if (!above && d < lo.digit(n)) continue;
            if (!below && d > hi.digit(n)) continue;
            auto t = step(Q, s, d);
            if (!t) continue;
            digits.push_back(static_cast<char>('0' + d));
            dfs(*t, above || d > lo.digit(n), below || d < hi.digit(n));
            digits.pop_back();
        }
    };
    dfs(x, false, false);
    return out;
}

}  // namespace dbx
