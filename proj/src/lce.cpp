#include "onemap/lce.hpp"

#include <algorithm>
#include <utility>

#include "onemap/errors.hpp"

namespace onemap {

SparseMin::SparseMin(const std::vector<Pos>& v) {
    const size_t n = v.size();
    if (n == 0) return;
    log2_.resize(n + 1, 0);
    for (size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    int levels = log2_[n] + 1;
    table_.resize(levels);
    table_[0] = v;
    for (int k = 1; k < levels; ++k) {
        size_t len = size_t{1} << k;
        table_[k].resize(n - len + 1);
        for (size_t i = 0; i + len <= n; ++i)
            table_[k][i] = std::min(table_[k - 1][i], table_[k - 1][i + len / 2]);
    }
}

Pos SparseMin::min(Pos lo, Pos hi) const {
    int k = log2_[static_cast<size_t>(hi - lo + 1)];
    return std::min(table_[k][lo], table_[k][hi - (Pos{1} << k) + 1]);
}

LceIndex::LceIndex(const Text& text, SuffixArray sa) : n_(text.n), fwd_sa_(std::move(sa)) {
    lcp_fwd_ = build_lcp_array(text, fwd_sa_);
    st_fwd_ = SparseMin(lcp_fwd_);
    Text rev = reversed(text);
    rev_sa_ = build_suffix_array(rev);
    lcp_rev_ = build_lcp_array(rev, rev_sa_);
    st_rev_ = SparseMin(lcp_rev_);
}

Pos LceIndex::lcp_impl(const SuffixArray& sa, const SparseMin& st, Pos i, Pos j) const {
    if (i > n_ || j > n_) return 0;
    if (i == j) return n_ - i + 1;
    Pos ra = sa.rank_of(i), rb = sa.rank_of(j);
    if (ra > rb) std::swap(ra, rb);
    return st.min(ra + 1, rb);
}

Pos LceIndex::lcp(Pos i, Pos j) const {
    if (i < 1 || j < 1) return 0;
    return lcp_impl(fwd_sa_, st_fwd_, i, j);
}

Pos LceIndex::lcs(Pos i, Pos j) const {
    if (i < 1 || j < 1) return 0;
    if (i > n_ || j > n_) return 0;
    return lcp_impl(rev_sa_, st_rev_, n_ - i + 1, n_ - j + 1);
}

Pos LceIndex::lcp_rev(Pos i, Pos j) const {
    if (i < 1 || j < 1) return 0;
    return lcp_impl(rev_sa_, st_rev_, i, j);
}

Pos LceIndex::lcs_rev(Pos i, Pos j) const {
    if (i < 1 || j < 1) return 0;
    if (i > n_ || j > n_) return 0;
    return lcp_impl(fwd_sa_, st_fwd_, n_ - i + 1, n_ - j + 1);
}

Pos LceIndex::lcp_query(Pos i, Pos j) const {
    if (i < 1 || j < 1) throw_error(Errc::PositionOutOfRange, "lcp_query positions are 1-based");
    return lcp(i, j);
}

Pos LceIndex::lcs_query(Pos i, Pos j) const {
    if (i < 1 || j < 1) throw_error(Errc::PositionOutOfRange, "lcs_query positions are 1-based");
    return lcs(i, j);
}

} // namespace onemap
