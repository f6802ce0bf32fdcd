#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "onemap/mappability.hpp"
#include "onemap/text.hpp"

namespace onemap {
namespace oracle {

// Brute-force reference implementations. Ground truth for every test;
// they share no index structures with the real algorithms.

constexpr Pos kDefaultMaxN = 200000;

/// Direct double loop over window pairs with early-exit Hamming counting.
/// exact = HD 0; one_mismatch generalizes to 1 <= HD <= k; total = their sum.
MappabilityVector naive_mappability(const Text& text, Pos m, int k = 1, Pos max_n = kDefaultMaxN);

struct StairsUpdate {
    enum class Kind { IncreasingStairs, DecreasingStairs, Interval };
    Kind kind;
    std::int32_t a = 0, b = 0;
    // stairs: sign in {+1,-1}; interval: arbitrary added value
    std::int64_t value = 0;
};

/// Literal per-step application of each update to a zero array of t counters.
/// Stairs use width p; interval updates ignore it.
std::vector<std::int64_t> naive_stairs_apply(std::int32_t t, std::int32_t p,
                                             const std::vector<StairsUpdate>& updates);

/// Sliding-window matcher; positions (1-based) grouped per distinct factor.
std::map<std::vector<Symbol>, std::vector<Pos>> naive_periodic_occurrences(const Text& text, Pos q,
                                                                           Pos max_n = kDefaultMaxN);

} // namespace oracle
} // namespace onemap
