#include "onemap/oracle.hpp"

#include <algorithm>

#include "onemap/errors.hpp"

namespace onemap {
namespace oracle {

MappabilityVector naive_mappability(const Text& text, Pos m, int k, Pos max_n) {
    if (text.n > max_n) throw_error(Errc::InputTooLarge, "oracle guarded at n <= " + std::to_string(max_n));
    if (m < 1 || m > text.n) throw_error(Errc::BadWindowLength, "need 1 <= m <= n");
    const Pos w = text.n - m + 1;
    MappabilityVector out;
    out.m = m;
    out.exact.assign(w, 0);
    out.one_mismatch.assign(w, 0);
    out.total_le1.assign(w, 0);
    const Symbol* s = text.data.data();

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (Pos i = 0; i < w; ++i) {
        Count ex = 0, mm = 0;
        for (Pos j = 0; j < w; ++j) {
            int hd = 0;
            for (Pos x = 0; x < m; ++x) {
                if (s[i + x] != s[j + x] && ++hd > k) break;
            }
            if (hd == 0)
                ++ex;
            else if (hd <= k)
                ++mm;
        }
        out.exact[i] = ex;
        out.one_mismatch[i] = mm;
        out.total_le1[i] = ex + mm;
    }
    return out;
}

std::vector<std::int64_t> naive_stairs_apply(std::int32_t t, std::int32_t p,
                                             const std::vector<StairsUpdate>& updates) {
    std::vector<std::int64_t> c(static_cast<size_t>(t) + 1, 0); // 1-based
    for (const auto& u : updates) {
        switch (u.kind) {
            case StairsUpdate::Kind::Interval:
                for (std::int32_t i = u.a; i <= u.b; ++i) c[i] += u.value;
                break;
            case StairsUpdate::Kind::IncreasingStairs: {
                // d-th step covers [a+p(d-1) .. min(a+pd-1, b)]
                std::int64_t d = 1;
                for (std::int32_t lo = u.a; lo <= u.b; lo += p, ++d) {
                    std::int32_t hi = std::min<std::int32_t>(lo + p - 1, u.b);
                    for (std::int32_t i = lo; i <= hi; ++i) c[i] += u.value * d;
                }
                break;
            }
            case StairsUpdate::Kind::DecreasingStairs: {
                // d-th step covers [max(b-pd+1, a) .. b-p(d-1)]
                std::int64_t d = 1;
                for (std::int32_t hi = u.b; hi >= u.a; hi -= p, ++d) {
                    std::int32_t lo = std::max<std::int32_t>(hi - p + 1, u.a);
                    for (std::int32_t i = lo; i <= hi; ++i) c[i] += u.value * d;
                }
                break;
            }
        }
    }
    return std::vector<std::int64_t>(c.begin() + 1, c.end());
}

std::map<std::vector<Symbol>, std::vector<Pos>> naive_periodic_occurrences(const Text& text, Pos q, Pos max_n) {
    if (text.n > max_n) throw_error(Errc::InputTooLarge, "oracle guarded at n <= " + std::to_string(max_n));
    std::map<std::vector<Symbol>, std::vector<Pos>> out;
    for (Pos i = 1; i + q - 1 <= text.n; ++i) {
        std::vector<Symbol> f(text.data.begin() + i - 1, text.data.begin() + i - 1 + q);
        out[f].push_back(i);
    }
    return out;
}

} // namespace oracle
} // namespace onemap
