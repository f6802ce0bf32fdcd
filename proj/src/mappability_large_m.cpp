#include "onemap/mappability_large_m.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "onemap/errors.hpp"
#include "onemap/stairs.hpp"
#include "onemap/suffix_array.hpp"
#include "onemap/trimmed_tree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace onemap {

namespace {

inline Count floor_div(Count a, Count b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// one j-interval with both window-offset bounds affine in j (slope 0 or +d)
struct BoundSeg {
    Pos ja, jb;
    Count lb;
    int lb_slope; // 0 or +1 (in units of d)
    Count ub;
    int ub_slope;
};

// raise the lower bound to max(lb, line v0 + slope*d*(j-ref_ja)); splits at the crossing
void combine_lower(std::vector<BoundSeg>& segs, Pos ref_ja, Count v0, int slope, Pos d) {
    std::vector<BoundSeg> out;
    out.reserve(segs.size() + 1);
    for (const BoundSeg& s : segs) {
        Count lv = v0 + static_cast<Count>(slope) * d * (s.ja - ref_ja);
        if (slope == s.lb_slope) {
            BoundSeg t = s;
            if (lv > t.lb) {
                t.lb = lv;
                t.lb_slope = slope;
            }
            out.push_back(t);
            continue;
        }
        // one line is flat, the other rises: a single crossing
        Count diff0 = lv - s.lb; // grows by +d or -d per step
        Count step = static_cast<Count>(slope - s.lb_slope) * d;
        Pos len = s.jb - s.ja;
        Pos cross; // first offset where the line wins
        if (step > 0)
            cross = diff0 > 0 ? 0 : static_cast<Pos>(std::min<Count>(floor_div(-diff0, step) + 1, len + 1));
        else
            cross = diff0 > 0 ? static_cast<Pos>(std::min<Count>(floor_div(diff0, -step) + 1, len + 1)) : 0;
        // step > 0: line wins from `cross` on; step < 0: line wins before `cross`
        Count ub_at_cross = s.ub + static_cast<Count>(s.ub_slope) * d * cross;
        if (step > 0) {
            if (cross > 0) out.push_back({s.ja, static_cast<Pos>(s.ja + std::min<Pos>(cross, len + 1) - 1),
                                          s.lb, s.lb_slope, s.ub, s.ub_slope});
            if (cross <= len)
                out.push_back({static_cast<Pos>(s.ja + cross), s.jb, lv + static_cast<Count>(slope) * d * cross,
                               slope, ub_at_cross, s.ub_slope});
        } else {
            if (cross > 0)
                out.push_back({s.ja, static_cast<Pos>(s.ja + std::min<Pos>(cross, len + 1) - 1), lv, slope,
                               s.ub, s.ub_slope});
            if (cross <= len)
                out.push_back({static_cast<Pos>(s.ja + cross), s.jb,
                               s.lb + static_cast<Count>(s.lb_slope) * d * cross, s.lb_slope, ub_at_cross,
                               s.ub_slope});
        }
    }
    segs.swap(out);
}

} // namespace

std::vector<ClusterUpdate> updates_from_cluster(const ArithmeticProgression& a, Pos anchor_pos,
                                                Pos m, Pos q, Pos half, const LceView& view) {
    const Pos d = a.count > 1 ? a.d : 1;
    std::vector<ClusterUpdate> out;

    auto emit_range = [&](Count lb, Count ub, Count weight) {
        // counter index is t+1
        if (lb > ub) return;
        out.push_back({ClusterUpdate::Kind::Interval, static_cast<std::int32_t>(lb + 1),
                       static_cast<std::int32_t>(ub + 1), weight});
    };

    std::function<void(const BoundSeg&)> emit_segment = [&](const BoundSeg& s) {
        const Pos len = s.jb - s.ja + 1;
        // drop empty windows; with differing slopes the emptiness flips once
        if (s.lb_slope == s.ub_slope) {
            if (s.lb > s.ub) return;
        } else if (s.lb_slope > s.ub_slope) { // lb rises, ub flat: a prefix is nonempty
            if (s.lb > s.ub) return;
            Count ok = floor_div(s.ub - s.lb, static_cast<Count>(d)); // offsets 0..ok nonempty
            if (ok < len - 1) {
                BoundSeg t = s;
                t.jb = static_cast<Pos>(s.ja + ok);
                emit_segment(t);
                return;
            }
        } else { // lb flat, ub rises: a suffix is nonempty
            if (s.ub + static_cast<Count>(len - 1) * d < s.lb) return;
            if (s.ub < s.lb) {
                Count skip = floor_div(s.lb - s.ub - 1, static_cast<Count>(d)) + 1;
                BoundSeg t = s;
                t.ja = static_cast<Pos>(s.ja + skip);
                t.ub = s.ub + skip * d;
                emit_segment(t);
                return;
            }
        }

        if (len == 1 || (s.lb_slope == 0 && s.ub_slope == 0)) {
            emit_range(s.lb, s.ub, len);
            return;
        }
        if (s.lb_slope == 0 && s.ub_slope == 1) {
            // windows share the start; tops form a staircase
            emit_range(s.lb, s.ub, len);
            out.push_back({ClusterUpdate::Kind::DecreasingStairs, static_cast<std::int32_t>(s.ub + 2),
                           static_cast<std::int32_t>(s.ub + static_cast<Count>(len - 1) * d + 1), +1});
            return;
        }
        if (s.lb_slope == 1 && s.ub_slope == 0) {
            Count lb_last = s.lb + static_cast<Count>(len - 1) * d;
            out.push_back({ClusterUpdate::Kind::IncreasingStairs, static_cast<std::int32_t>(s.lb + 1),
                           static_cast<std::int32_t>(lb_last), +1});
            emit_range(lb_last, s.ub, len);
            return;
        }
        // both rise: sliding window [x..y], [x+d..y+d], ...
        Count x = s.lb, y = s.ub;
        Count shift = static_cast<Count>(len - 1) * d;
        out.push_back({ClusterUpdate::Kind::IncreasingStairs, static_cast<std::int32_t>(x + 1),
                       static_cast<std::int32_t>(x + shift), +1});
        out.push_back({ClusterUpdate::Kind::IncreasingStairs, static_cast<std::int32_t>(y + 2),
                       static_cast<std::int32_t>(y + shift + 1), -1});
        emit_range(x + shift, y + shift, len);
    };

    std::vector<ExtentPiece> rp = right_extension_pieces(a, anchor_pos, view);
    std::vector<LeftPiece> lp = left_extension_pieces(a, anchor_pos, view);

    size_t li = 0;
    for (const ExtentPiece& r : rp) {
        for (Pos ja = r.ja; ja <= r.jb;) {
            while (lp[li].jb < ja) ++li;
            Pos jb = std::min(r.jb, lp[li].jb);
            // bounds at ja: lb = max(m - r, half - r1, 0), ub = min(l, q)
            Count r_at = r.r + static_cast<Count>(r.r_slope) * d * (ja - r.ja);
            Count r1_at = r.r1 + static_cast<Count>(r.r1_slope) * d * (ja - r.ja);
            Count l_at = lp[li].l + static_cast<Count>(lp[li].l_slope) * d * (ja - lp[li].ja);

            std::vector<BoundSeg> segs{{ja, jb, m - r_at, -r.r_slope, l_at, lp[li].l_slope}};
            combine_lower(segs, ja, half - r1_at, -r.r1_slope, d);
            combine_lower(segs, ja, 0, 0, d);
            // cap ub at q
            for (size_t k = 0; k < segs.size(); ++k) {
                BoundSeg s = segs[k];
                if (s.ub_slope == 0) {
                    s.ub = std::min<Count>(s.ub, q);
                    emit_segment(s);
                    continue;
                }
                // rising ub crosses q at most once
                Count over = q - s.ub; // >= 0 until the crossing
                Pos len = s.jb - s.ja;
                Pos cross = over < 0 ? 0 : static_cast<Pos>(std::min<Count>(floor_div(over, d) + 1, len + 1));
                if (cross > 0) {
                    BoundSeg t = s;
                    t.jb = static_cast<Pos>(s.ja + cross - 1);
                    emit_segment(t);
                }
                if (cross <= len) {
                    BoundSeg t = s;
                    t.ja = static_cast<Pos>(s.ja + cross);
                    t.lb = s.lb + static_cast<Count>(s.lb_slope) * d * cross;
                    t.ub = q;
                    t.ub_slope = 0;
                    emit_segment(t);
                }
            }
            ja = jb + 1;
        }
    }
    return out;
}

namespace {

std::vector<Count> run_side(const Text& side_text, const LceView& view, const SuffixArray& sa,
                            const std::vector<Pos>& lcp, Pos m, Pos half, LargeMStats* stats,
                            bool parallel) {
    const Pos n = side_text.n;
    const Pos q = m / 4;
    const Pos wcount = n - m + 1;
    TrimmedSuffixTree tree_q(side_text, q, sa, lcp);
    auto progs = periodic_occurrences(tree_q);

    std::vector<Count> lo(static_cast<size_t>(wcount), 0);
    std::vector<Pos> bases;
    for (Pos i = 1; i <= wcount; i += q + 1) bases.push_back(i);

    Count total_updates = 0, max_updates = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total_updates) \
    reduction(max : max_updates) if (parallel)
#endif
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(bases.size()); ++bi) {
        const Pos base = bases[static_cast<size_t>(bi)];
        const Pos anchor = base + q;
        const auto& aps = progs[static_cast<size_t>(tree_q.leaf_of_window(anchor))];
        Pos width = 1;
        for (const auto& a : aps)
            if (a.count > 1) {
                width = a.d; // all multi-element progressions share per(anchor)
                break;
            }
        StairsCounters counters(q + 1, width);
        for (const auto& a : aps)
            for (const ClusterUpdate& u : updates_from_cluster(a, anchor, m, q, half, view)) {
                switch (u.kind) {
                    case ClusterUpdate::Kind::Interval:
                        counters.apply_interval(u.a, u.b, u.value);
                        break;
                    case ClusterUpdate::Kind::IncreasingStairs:
                        counters.apply_increasing(u.a, u.b, static_cast<int>(u.value));
                        break;
                    case ClusterUpdate::Kind::DecreasingStairs:
                        counters.apply_decreasing(u.a, u.b, static_cast<int>(u.value));
                        break;
                }
            }
        total_updates += counters.update_count();
        max_updates = std::max<Count>(max_updates, counters.update_count());
        std::vector<Count> vals = counters.report_all();
        Pos tmin = std::max<Pos>(0, base + q - wcount);
        for (Pos t = tmin; t <= q; ++t) lo[static_cast<size_t>(base + q - t) - 1] = vals[static_cast<size_t>(t)];
    }
    if (stats) {
        stats->batches += static_cast<Count>(bases.size());
        stats->updates += total_updates;
        stats->max_updates_per_batch = std::max(stats->max_updates_per_batch, max_updates);
    }
    return lo;
}

} // namespace

MappabilityVector one_mappability_large_m(const Text& text, Pos m, const LceIndex& lce,
                                          LargeMStats* stats, const LargeMOptions& opt) {
    if (m < 8 || m > text.n)
        throw_error(Errc::BadWindowLength, "batch algorithm needs 8 <= m <= n");
    const Pos n = text.n;
    const Pos wcount = n - m + 1;
    const Pos half_left = (m + 1) / 2;
    const Pos half_right = m - half_left;

    LceView fwd{&lce, false};
    LceView rev{&lce, true};
    Text rev_text = reversed(text);

    std::vector<Count> lo =
        run_side(text, fwd, lce.fwd_sa(), lce.fwd_lcp_array(), m, half_left, stats, opt.parallel);
    std::vector<Count> ro_rev =
        run_side(rev_text, rev, lce.rev_sa(), lce.rev_lcp_array(), m, half_right, stats, opt.parallel);

    TrimmedSuffixTree tree_m(text, m, lce.fwd_sa(), lce.fwd_lcp_array());
    std::vector<Count> exact = tree_m.exact_window_counts();

    MappabilityVector out;
    out.m = m;
    out.exact = std::move(exact);
    out.one_mismatch.assign(static_cast<size_t>(wcount), 0);
    out.total_le1.assign(static_cast<size_t>(wcount), 0);
    for (Pos i = 1; i <= wcount; ++i) {
        Count ro = ro_rev[static_cast<size_t>(n - i - m + 2) - 1];
        Count total = lo[static_cast<size_t>(i) - 1] + ro - out.exact[static_cast<size_t>(i) - 1];
        out.total_le1[static_cast<size_t>(i) - 1] = total;
        out.one_mismatch[static_cast<size_t>(i) - 1] = total - out.exact[static_cast<size_t>(i) - 1];
    }
    return out;
}

MappabilityVector one_mappability_large_m(const Text& text, Pos m) {
    LceIndex lce(text, build_suffix_array(text));
    return one_mappability_large_m(text, m, lce);
}

} // namespace onemap
