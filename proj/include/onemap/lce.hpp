#pragma once

#include <vector>

#include "onemap/suffix_array.hpp"
#include "onemap/text.hpp"

namespace onemap {

/// O(1) range-minimum over a fixed array, O(n log n) table.
class SparseMin {
public:
    SparseMin() = default;
    explicit SparseMin(const std::vector<Pos>& v);

    /// min of v[lo..hi], inclusive; requires lo <= hi
    Pos min(Pos lo, Pos hi) const;

private:
    std::vector<std::vector<Pos>> table_;
    std::vector<int> log2_;
};

/// Longest-common-extension queries in both directions, backed by
/// range-minimum over the LCP arrays of the text and of its reversal.
///
/// Query domain: positions >= 1. Positions past n denote empty suffixes
/// (or empty prefixes for lcs) and yield 0; positions < 1 throw
/// PositionOutOfRange.
class LceIndex {
public:
    LceIndex(const Text& text, SuffixArray sa);

    Pos n() const { return n_; }

    /// max l with S[i..i+l-1] == S[j..j+l-1]
    Pos lcp_query(Pos i, Pos j) const;
    /// max l with S[i-l+1..i] == S[j-l+1..j]
    Pos lcs_query(Pos i, Pos j) const;

    /// Same queries without the low-side validation; i,j < 1 yield 0.
    Pos lcp(Pos i, Pos j) const;
    Pos lcs(Pos i, Pos j) const;

    /// LCP of the *reversed* text at reversed-text positions.
    Pos lcp_rev(Pos i, Pos j) const;
    /// LCS of the reversed text == LCP of the original at mapped positions.
    Pos lcs_rev(Pos i, Pos j) const;

    const SuffixArray& fwd_sa() const { return fwd_sa_; }
    const std::vector<Pos>& fwd_lcp_array() const { return lcp_fwd_; }
    const SuffixArray& rev_sa() const { return rev_sa_; }
    const std::vector<Pos>& rev_lcp_array() const { return lcp_rev_; }

private:
    Pos lcp_impl(const SuffixArray& sa, const SparseMin& st, Pos i, Pos j) const;

    Pos n_ = 0;
    SuffixArray fwd_sa_;
    SuffixArray rev_sa_;
    std::vector<Pos> lcp_fwd_, lcp_rev_;
    SparseMin st_fwd_, st_rev_;
};

} // namespace onemap
