#pragma once

#include <cmath>
#include <vector>

#include "onemap/text.hpp"

namespace onemap {

/// Per window start i in [1 .. n-m+1] (stored at index i-1):
///   exact        — number of j with HD(S[i..i+m-1], S[j..j+m-1]) = 0, j = i included
///   one_mismatch — number of j at Hamming distance exactly 1
///   total_le1    — exact + one_mismatch
struct MappabilityVector {
    Pos m = 0;
    std::vector<Count> exact;
    std::vector<Count> one_mismatch;
    std::vector<Count> total_le1;

    Pos windows() const { return static_cast<Pos>(exact.size()); }
};

enum class Algorithm { Auto, NlogN, LargeM, Naive };

/// Auto picks the linear-time batch algorithm only where it is valid and
/// expected to win: m >= max(8, ceil(sqrt(n))).
inline Algorithm resolve_algorithm(Algorithm a, Pos n, Pos m) {
    if (a != Algorithm::Auto) return a;
    Pos root = static_cast<Pos>(std::ceil(std::sqrt(static_cast<double>(n))));
    return m >= std::max<Pos>(8, root) ? Algorithm::LargeM : Algorithm::NlogN;
}

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Auto: return "auto";
        case Algorithm::NlogN: return "nlogn";
        case Algorithm::LargeM: return "large-m";
        case Algorithm::Naive: return "naive";
    }
    return "?";
}

} // namespace onemap
