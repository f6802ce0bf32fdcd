#include "onemap/suffix_array.hpp"

#include <algorithm>
#include <numeric>

#include "onemap/errors.hpp"

namespace onemap {

namespace {

// Prefix doubling with counting sorts: O(n log n) time, O(n) space per pass.
std::vector<Pos> doubling_sa(const std::vector<Symbol>& s) {
    const Pos n = static_cast<Pos>(s.size());
    std::vector<Pos> sa(n), cls(n), tmp(n), cnt;

    Symbol sigma = 0;
    for (Symbol c : s) sigma = std::max(sigma, c + 1);
    cnt.assign(std::max<Pos>(sigma, n) + 1, 0);

    for (Pos i = 0; i < n; ++i) cnt[s[i] + 1]++;
    for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (Pos i = 0; i < n; ++i) sa[cnt[s[i]]++] = i;
    Pos classes = 0;
    cls[sa[0]] = 0;
    for (Pos r = 1; r < n; ++r) {
        if (s[sa[r]] != s[sa[r - 1]]) ++classes;
        cls[sa[r]] = classes;
    }
    ++classes;

    std::vector<Pos> sa2(n), cls2(n);
    for (Pos k = 1; classes < n; k *= 2) {
        // sort by second key via shift: suffixes i >= n-k have empty second part, smallest
        Pos fill = 0;
        for (Pos i = n - k; i < n; ++i) sa2[fill++] = i;
        for (Pos r = 0; r < n; ++r)
            if (sa[r] >= k) sa2[fill++] = sa[r] - k;
        // stable counting sort by first key
        std::fill(cnt.begin(), cnt.begin() + classes + 1, 0);
        for (Pos i = 0; i < n; ++i) cnt[cls[i] + 1]++;
        for (Pos i = 1; i <= classes; ++i) cnt[i] += cnt[i - 1];
        for (Pos r = 0; r < n; ++r) sa[cnt[cls[sa2[r]]]++] = sa2[r];

        cls2[sa[0]] = 0;
        Pos c = 0;
        for (Pos r = 1; r < n; ++r) {
            Pos a = sa[r - 1], b = sa[r];
            Pos a2 = a + k < n ? cls[a + k] : -1;
            Pos b2 = b + k < n ? cls[b + k] : -1;
            if (cls[a] != cls[b] || a2 != b2) ++c;
            cls2[sa[r]] = c;
        }
        cls.swap(cls2);
        classes = c + 1;
    }
    return sa;
}

} // namespace

SuffixArray build_suffix_array(const Text& text) {
    if (text.n == 0) throw_error(Errc::EmptyText, "cannot index an empty text");
    SuffixArray out;
    std::vector<Pos> sa0 = doubling_sa(text.data);
    out.sa.resize(text.n);
    out.rank.assign(static_cast<size_t>(text.n) + 1, 0);
    for (Pos r = 0; r < text.n; ++r) {
        out.sa[r] = sa0[r] + 1;
        out.rank[sa0[r] + 1] = r;
    }
    return out;
}

std::vector<Pos> build_lcp_array(const Text& text, const SuffixArray& sa) {
    const Pos n = text.n;
    std::vector<Pos> lcp(n, 0);
    Pos h = 0;
    for (Pos i = 1; i <= n; ++i) {
        Pos r = sa.rank_of(i);
        if (r == n - 1) {
            h = 0;
            continue;
        }
        Pos j = sa.sa[r + 1];
        while (i + h <= n && j + h <= n && text.at(i + h) == text.at(j + h)) ++h;
        lcp[r + 1] = h;
        if (h > 0) --h;
    }
    return lcp;
}

} // namespace onemap
