#pragma once

#include "dbx/inverse.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace fixtures {

struct Pair {
    const char* name;
    const char* mu;
    const char* alpha;
    dbx::CaseLabel expected;
};

// The twelve case pairs, in case order.
inline const std::vector<Pair> twelve = {
    {"i", "0(01)", "1(110)", dbx::CaseLabel::I},         {"ii", "0(01)", "110(01)", dbx::CaseLabel::II},
    {"iii", "001(110)", "1(110)", dbx::CaseLabel::III},  {"iv", "0(01)", "(110)", dbx::CaseLabel::IV},
    {"v", "(01)", "1(110)", dbx::CaseLabel::V},          {"vi", "0(01)", "(10)", dbx::CaseLabel::VI},
    {"vii", "(01)", "11(01)", dbx::CaseLabel::VII},      {"viii", "(01)", "(110)", dbx::CaseLabel::VIII},
    {"ix", "(00011)", "(11000)", dbx::CaseLabel::IX},    {"x", "00(110)", "(10)", dbx::CaseLabel::X},
    {"xi", "0(01)", "11(001)", dbx::CaseLabel::XI},      {"xii", "00(110)", "11(001)", dbx::CaseLabel::XII},
};

// Twelve more realizable pairs.
inline const std::vector<Pair> extra = {
    {"i-b", "0(001)", "1(1110)", dbx::CaseLabel::I},      {"iv-b", "0(001)", "(1110)", dbx::CaseLabel::IV},
    {"viii-b", "(001)", "(1110)", dbx::CaseLabel::VIII},  {"ii-b", "0(01)", "1110(01)", dbx::CaseLabel::II},
    {"v-b", "(001)", "111(01)", dbx::CaseLabel::V},       {"xi-a", "(01)", "11(001)", dbx::CaseLabel::XI},
    {"xi-b", "(01)", "111(001)", dbx::CaseLabel::XI},     {"vi-b", "00(110)", "(110)", dbx::CaseLabel::VI},
    {"viii-c", "(001)", "(110)", dbx::CaseLabel::VIII},   {"ix-b", "(011)", "(110)", dbx::CaseLabel::IX},
    {"x-b", "00(11110)", "111(01)", dbx::CaseLabel::X},   {"xii-b", "00(11110)", "111(0001)", dbx::CaseLabel::XII},
};

inline dbx::ProfileSpec spec(const Pair& p) {
    return {dbx::PeriodicSeq::parse(p.mu), dbx::PeriodicSeq::parse(p.alpha)};
}

// Solved bases are cached per pair within one process.
inline const dbx::SolvedBase& solved(const Pair& p) {
    static std::mutex mu;
    static std::map<std::string, dbx::SolvedBase> cache;
    std::lock_guard lk(mu);
    auto it = cache.find(p.name);
    if (it == cache.end()) it = cache.emplace(p.name, dbx::solve_base(spec(p)).roots.at(0)).first;
    return it->second;
}

}  // namespace fixtures
