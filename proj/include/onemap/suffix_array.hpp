#pragma once

#include <vector>

#include "onemap/text.hpp"

namespace onemap {

/// Lexicographically sorted suffixes. sa[r] (r = 0..n-1) is the 1-based start
/// of the rank-r suffix; rank[i] inverts it: rank[sa[r]] == r. The empty
/// suffix is omitted.
struct SuffixArray {
    std::vector<Pos> sa;
    std::vector<Pos> rank; // indexed 1..n, slot 0 unused

    Pos size() const { return static_cast<Pos>(sa.size()); }
    Pos rank_of(Pos i) const { return rank[static_cast<size_t>(i)]; }
};

SuffixArray build_suffix_array(const Text& text);

/// Kasai. lcp[r] (r = 1..n-1) is the LCP of the suffixes at sa[r-1] and sa[r].
std::vector<Pos> build_lcp_array(const Text& text, const SuffixArray& sa);

} // namespace onemap
