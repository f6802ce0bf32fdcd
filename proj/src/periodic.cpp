#include "onemap/periodic.hpp"

#include <algorithm>
#include <cassert>

#include "onemap/errors.hpp"

namespace onemap {

namespace {

inline Count floor_div(Count a, Count b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline Count ceil_div(Count a, Count b) { return a >= 0 ? (a + b - 1) / b : -(-a / b); }

using Kind = LceRep::Kind;

// LCP(i, s + j*d) for j in [0..count-1], via O(1) queries against any
// lcp-like callable. Precondition for count > 1: the positions share one
// run with period d, i.e. lcp(s, s+d) >= (count-2)*d.
template <class LcpFn>
LceRep extent_impl(Pos s, Pos d, Pos count, Pos i, LcpFn&& lcp) {
    LceRep rep;
    rep.d = d;
    rep.count = count;
    if (count == 1) {
        rep.parts.push_back({0, 0, lcp(i, s), Kind::Const});
        return rep;
    }
    // one O(1) query verifies interior d-periodicity across the positions
    if (d < 1 || lcp(s, s + d) < static_cast<Count>(count - 2) * d)
        throw_error(Errc::NotARun, "progression positions do not share a run with period d");
    Count l_p = lcp(i, s);
    if (l_p < d) {
        rep.parts.push_back({0, count - 2, l_p, Kind::Const});
        rep.aligned = {{count - 1, lcp(i, s + (count - 1) * d)}};
    } else {
        Count ex_i = d + lcp(i, i + d);
        Count ex_s = d + lcp(s, s + d);
        Count delta = ex_s - ex_i; // aligned index j* = delta / d
        Pos hi_const = static_cast<Pos>(std::min<Count>(ceil_div(delta, d) - 1, count - 1));
        if (hi_const >= 0) rep.parts.push_back({0, hi_const, ex_i, Kind::Const});
        Pos lo_arith = static_cast<Pos>(std::max<Count>(floor_div(delta, d) + 1, 0));
        if (lo_arith <= count - 1) rep.parts.push_back({lo_arith, count - 1, ex_s, Kind::ArithDown});
        if (delta % d == 0 && delta >= 0 && delta / d <= count - 1) {
            Pos js = static_cast<Pos>(delta / d);
            rep.aligned = {{js, lcp(i, s + js * d)}};
        }
    }
    return rep;
}

} // namespace

Count LceRep::value_at(Pos j) const {
    if (aligned && aligned->first == j) return aligned->second;
    for (const Part& p : parts) {
        if (p.ja <= j && j <= p.jb) {
            switch (p.kind) {
                case Kind::Const: return p.base;
                case Kind::ArithDown: return p.base - static_cast<Count>(j) * d;
                case Kind::ArithUp: return p.base + static_cast<Count>(j) * d;
            }
        }
    }
    assert(!"index not covered by LceRep");
    return 0;
}

std::vector<std::vector<ArithmeticProgression>> periodic_occurrences(const TrimmedSuffixTree& tree) {
    const Pos q = tree.m();
    const Pos wcount = tree.n() - q + 1;
    std::vector<std::vector<ArithmeticProgression>> out(static_cast<size_t>(tree.node_count()));

    struct Chain {
        Pos prev = 0, runstart = 0, gap = 0;
    };
    std::vector<Chain> chain(static_cast<size_t>(tree.node_count()));
    auto close = [&](TrimmedSuffixTree::NodeId v, const Chain& c) {
        if (c.runstart == c.prev)
            out[static_cast<size_t>(v)].push_back({c.prev, c.prev, 0, 1});
        else
            out[static_cast<size_t>(v)].push_back(
                {c.runstart, c.prev, c.gap, (c.prev - c.runstart) / c.gap + 1});
    };

    for (Pos i = 1; i <= wcount; ++i) {
        auto v = tree.leaf_of_window(i);
        Chain& c = chain[static_cast<size_t>(v)];
        if (c.prev == 0) {
            c.prev = c.runstart = i;
            continue;
        }
        Pos gap = i - c.prev;
        if (2 * gap > q) { // occurrences further apart than q/2 start a new chain
            close(v, c);
            c.prev = c.runstart = i;
            c.gap = 0;
        } else {
            assert(c.gap == 0 || c.gap == gap); // within a chain every gap is per(w)
            c.gap = gap;
            c.prev = i;
        }
    }
    for (TrimmedSuffixTree::NodeId v = 0; v < tree.node_count(); ++v)
        if (chain[static_cast<size_t>(v)].prev != 0) close(v, chain[static_cast<size_t>(v)]);
    return out;
}

LceRep repetitive_lcp(const ArithmeticProgression& a, Pos i, const LceView& view) {
    return extent_impl(a.s, a.d, a.count, i,
                       [&](Pos x, Pos y) { return static_cast<Count>(view.lcp(x, y)); });
}

LceRep repetitive_lcs(const ArithmeticProgression& a, Pos i, const LceView& view) {
    const Pos n = view.n();
    if (a.count == 1) {
        LceRep rep;
        rep.d = a.d;
        rep.count = 1;
        rep.parts.push_back({0, 0, static_cast<Count>(view.lcs(i, a.s)), Kind::Const});
        return rep;
    }
    // reflect: member j sits at n+1-s_j; ascending order is k = count-1-j
    LceRep refl = extent_impl(n + 1 - a.e, a.d, a.count, n + 1 - i, [&](Pos x, Pos y) {
        return static_cast<Count>(view.lcs(n + 1 - x, n + 1 - y));
    });
    LceRep rep;
    rep.d = a.d;
    rep.count = a.count;
    for (auto it = refl.parts.rbegin(); it != refl.parts.rend(); ++it) {
        Pos ja = a.count - 1 - it->jb, jb = a.count - 1 - it->ja;
        if (it->kind == Kind::Const) {
            rep.parts.push_back({ja, jb, it->base, Kind::Const});
        } else {
            assert(it->kind == Kind::ArithDown);
            // base' - k*d == (base' - (count-1)d) + j*d
            rep.parts.push_back(
                {ja, jb, it->base - static_cast<Count>(a.count - 1) * a.d, Kind::ArithUp});
        }
    }
    if (refl.aligned) rep.aligned = {{a.count - 1 - refl.aligned->first, refl.aligned->second}};
    return rep;
}

std::vector<ExtentPiece> right_extension_pieces(const ArithmeticProgression& a, Pos anchor,
                                                const LceView& view) {
    const Pos n = view.n();
    const Pos d = a.count > 1 ? a.d : 1;
    std::vector<ExtentPiece> out;

    // min(r, n+1-s_j): the cap line has slope -1; splits a slope-0 piece once
    auto emit = [&](Pos ja, Pos jb, Count r1v, int r1s, Count rv, int rs) {
        Count capv = static_cast<Count>(n) + 1 - a.pos_at(ja);
        if (rs == -1) {
            out.push_back({ja, jb, r1v, r1s, std::min(rv, capv), -1});
            return;
        }
        Count kc = floor_div(capv - rv, d) + 1; // first offset where the cap bites
        if (kc <= 0) {
            out.push_back({ja, jb, r1v, r1s, capv, -1});
        } else if (kc > jb - ja) {
            out.push_back({ja, jb, r1v, r1s, rv, 0});
        } else {
            out.push_back({ja, static_cast<Pos>(ja + kc - 1), r1v, r1s, rv, 0});
            out.push_back({static_cast<Pos>(ja + kc), jb, r1v + r1s * kc * d, r1s,
                           capv - kc * d, -1});
        }
    };
    auto eval_single = [&](Pos j) {
        Pos sj = a.pos_at(j);
        Count r1 = view.lcp(sj, anchor);
        Count r = r1 + 1 + view.lcp(sj + static_cast<Pos>(r1) + 1, anchor + static_cast<Pos>(r1) + 1);
        emit(j, j, r1, 0, r, 0);
    };
    if (a.count == 1) {
        eval_single(0);
        return out;
    }

    LceRep rep1 = repetitive_lcp(a, anchor, view);

    // r1 constant L on [ja..jb]: post-mismatch starts s_j+L+1 keep the
    // progression structure (difference d, same run), the anchor side is fixed
    auto second_const = [&](Pos ja, Pos jb, Count L) {
        if (a.pos_at(jb) + L + 1 > n + 1) {
            // r1 saturated the suffix at s_jb; its second jump is empty
            emit(jb, jb, L, 0, L + 1, 0);
            if (--jb < ja) return;
        }
        if (ja == jb) {
            eval_single(ja);
            return;
        }
        ArithmeticProgression a2{a.pos_at(ja) + static_cast<Pos>(L) + 1,
                                 a.pos_at(jb) + static_cast<Pos>(L) + 1, d, jb - ja + 1};
        LceRep rep2 = repetitive_lcp(a2, anchor + static_cast<Pos>(L) + 1, view);
        for (const auto& p : rep2.parts) {
            Count v0 = p.kind == Kind::Const ? p.base : p.base - static_cast<Count>(p.ja) * d;
            assert(p.kind != Kind::ArithUp);
            emit(ja + p.ja, ja + p.jb, L, 0, L + 1 + v0, p.kind == Kind::Const ? 0 : -1);
        }
        if (rep2.aligned)
            emit(ja + rep2.aligned->first, ja + rep2.aligned->first, L, 0,
                 L + 1 + rep2.aligned->second, 0);
    };
    // r1 arithmetic B - j*d on [ja..jb]: the post-mismatch start is the fixed
    // position s+B+1; the anchor side descends, so re-index ascending by k=jb-j
    auto second_arith = [&](Pos ja, Pos jb, Count B) {
        Pos fixed2 = a.s + static_cast<Pos>(B) + 1;
        if (fixed2 >= n + 1) { // anchor-side text exhausted: every second jump is empty
            emit(ja, jb, B - static_cast<Count>(ja) * d, -1, B + 1 - static_cast<Count>(ja) * d, -1);
            return;
        }
        ArithmeticProgression a2{anchor + static_cast<Pos>(B) + 1 - jb * d,
                                 anchor + static_cast<Pos>(B) + 1 - ja * d, d, jb - ja + 1};
        LceRep rep2 = repetitive_lcp(a2, fixed2, view);
        for (const auto& p : rep2.parts) {
            Pos j0 = jb - p.jb, j1 = jb - p.ja;
            assert(p.kind != Kind::ArithUp);
            if (p.kind == Kind::Const) {
                // r(j) = (B - j*d) + 1 + base: still arithmetic down
                emit(j0, j1, B - static_cast<Count>(j0) * d, -1,
                     B + 1 + p.base - static_cast<Count>(j0) * d, -1);
            } else {
                // v(k) = base - k*d cancels the slope: r == B + 1 + base - jb*d
                emit(j0, j1, B - static_cast<Count>(j0) * d, -1,
                     B + 1 + p.base - static_cast<Count>(jb) * d, 0);
            }
        }
        if (rep2.aligned) {
            Pos j = jb - rep2.aligned->first;
            emit(j, j, B - static_cast<Count>(j) * d, 0, B - static_cast<Count>(j) * d + 1 + rep2.aligned->second,
                 0);
        }
    };

    for (const auto& p : rep1.parts) {
        if (p.ja == p.jb) {
            eval_single(p.ja);
        } else if (p.kind == Kind::Const) {
            second_const(p.ja, p.jb, p.base);
        } else {
            assert(p.kind == Kind::ArithDown);
            second_arith(p.ja, p.jb, p.base);
        }
    }
    if (rep1.aligned) eval_single(rep1.aligned->first);

    std::sort(out.begin(), out.end(), [](const ExtentPiece& x, const ExtentPiece& y) { return x.ja < y.ja; });
#ifndef NDEBUG
    Pos expect = 0;
    for (const auto& p : out) {
        assert(p.ja == expect && p.jb >= p.ja);
        expect = p.jb + 1;
    }
    assert(expect == a.count);
#endif
    return out;
}

std::vector<LeftPiece> left_extension_pieces(const ArithmeticProgression& a, Pos anchor,
                                             const LceView& view) {
    std::vector<LeftPiece> out;
    if (a.count == 1) {
        out.push_back({0, 0, static_cast<Count>(view.lcs(anchor - 1, a.s - 1)), 0});
        return out;
    }
    ArithmeticProgression shifted{a.s - 1, a.e - 1, a.d, a.count};
    LceRep rep = repetitive_lcs(shifted, anchor - 1, view);
    for (const auto& p : rep.parts) {
        Count v0 = p.kind == Kind::Const ? p.base : p.base + static_cast<Count>(p.ja) * a.d;
        assert(p.kind != Kind::ArithDown);
        out.push_back({p.ja, p.jb, v0, p.kind == Kind::Const ? 0 : 1});
    }
    if (rep.aligned) out.push_back({rep.aligned->first, rep.aligned->first, rep.aligned->second, 0});
    std::sort(out.begin(), out.end(), [](const LeftPiece& x, const LeftPiece& y) { return x.ja < y.ja; });
#ifndef NDEBUG
    Pos expect = 0;
    for (const auto& p : out) {
        assert(p.ja == expect && p.jb >= p.ja);
        expect = p.jb + 1;
    }
    assert(expect == a.count);
#endif
    return out;
}

SingleWordCounter::SingleWordCounter(const Text& text, Pos m, const LceIndex& lce)
    : lce_(&lce), n_(text.n), m_(m) {
    if (m < 1 || m > n_) throw_error(Errc::BadWindowLength, "need 1 <= m <= n");
    half_left_ = (m + 1) / 2;
    half_right_ = m - half_left_;
    if (m == 1) return; // every window is within distance 1 of every other
    rev_text_ = reversed(text);
    fwd_half_.emplace(text, half_left_, lce.fwd_sa(), lce.fwd_lcp_array());
    fwd_progs_ = periodic_occurrences(*fwd_half_);
    rev_half_.emplace(rev_text_, half_right_, lce.rev_sa(), lce.rev_lcp_array());
    rev_progs_ = periodic_occurrences(*rev_half_);
    full_.emplace(text, m, lce.fwd_sa(), lce.fwd_lcp_array());
}

Count SingleWordCounter::count_side(const LceView& view, const TrimmedSuffixTree& tree,
                                    const std::vector<std::vector<ArithmeticProgression>>& progs,
                                    Pos start) const {
    Count total = 0;
    for (const ArithmeticProgression& a : progs[static_cast<size_t>(tree.leaf_of_window(start))]) {
        const Pos d = a.count > 1 ? a.d : 1;
        for (const ExtentPiece& p : right_extension_pieces(a, start, view)) {
            if (p.r < m_) continue; // largest value sits at ja for either slope
            if (p.r_slope == 0)
                total += p.jb - p.ja + 1;
            else
                total += std::min<Count>(p.jb - p.ja, floor_div(p.r - m_, d)) + 1;
        }
    }
    return total;
}

Count SingleWordCounter::count(Pos i) const {
    if (i < 1 || i > n_ - m_ + 1) throw_error(Errc::PositionOutOfRange, "window start out of range");
    if (m_ == 1) return n_;
    LceView fwd{lce_, false};
    LceView rev{lce_, true};
    Count lo = count_side(fwd, *fwd_half_, fwd_progs_, i);
    Count ro = count_side(rev, *rev_half_, rev_progs_, n_ - i - m_ + 2);
    Count exact = full_->occ_count(full_->leaf_of_window(i));
    return lo + ro - exact;
}

} // namespace onemap
