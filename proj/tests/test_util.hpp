#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "onemap/text.hpp"

namespace onemap::testutil {

inline Text random_text(std::mt19937& rng, Pos n, Symbol sigma) {
    std::uniform_int_distribution<Symbol> dist(0, sigma - 1);
    std::vector<Symbol> codes(static_cast<size_t>(n));
    for (auto& c : codes) c = dist(rng);
    return make_text_from_codes(std::move(codes));
}

/// Fibonacci word prefix of length n over {a, b}.
inline Text fibonacci_text(Pos n) {
    std::string a = "a", b = "ab";
    while (static_cast<Pos>(b.size()) < n) {
        std::string next = b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return make_text(std::string_view(b).substr(0, static_cast<size_t>(n)));
}

inline Pos naive_lcp(const Text& t, Pos i, Pos j) {
    Pos l = 0;
    while (i + l <= t.n && j + l <= t.n && t.at(i + l) == t.at(j + l)) ++l;
    return l;
}

inline Pos naive_lcs(const Text& t, Pos i, Pos j) {
    Pos l = 0;
    while (i - l >= 1 && j - l >= 1 && t.at(i - l) == t.at(j - l)) ++l;
    return l;
}

inline int hamming(const Text& t, Pos i, Pos j, Pos m) {
    int hd = 0;
    for (Pos x = 0; x < m; ++x)
        if (t.at(i + x) != t.at(j + x)) ++hd;
    return hd;
}

} // namespace onemap::testutil
