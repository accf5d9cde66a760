#pragma once

#include <cstddef>
#include <string>

namespace dbx {

// Number of expansions of a point.
struct CountResult {
    enum class Kind { Exact, CountablyInfinite, Continuum, AtLeastAtDepth };
    Kind kind = Kind::AtLeastAtDepth;
    size_t k = 0;      // Exact count, or the lower bound
    size_t depth = 0;  // for AtLeastAtDepth

    static CountResult exact(size_t k) { return {Kind::Exact, k, 0}; }
    static CountResult countably_infinite() { return {Kind::CountablyInfinite, 0, 0}; }
    static CountResult continuum() { return {Kind::Continuum, 0, 0}; }
    static CountResult at_least(size_t k, size_t depth) { return {Kind::AtLeastAtDepth, k, depth}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Exact: return "Exact(" + std::to_string(k) + ")";
            case Kind::CountablyInfinite: return "CountablyInfinite";
            case Kind::Continuum: return "Continuum";
            default: return "AtLeastAtDepth(" + std::to_string(k) + ", " + std::to_string(depth) + ")";
        }
    }
    friend bool operator==(const CountResult&, const CountResult&) = default;
};

}  // namespace dbx
