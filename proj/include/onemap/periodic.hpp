#pragma once

#include <optional>
#include <vector>

#include "onemap/lce.hpp"
#include "onemap/text.hpp"
#include "onemap/trimmed_tree.hpp"

namespace onemap {

/// One direction of the text. The reversed view answers lcp/lcs in
/// reversed-text coordinates without extra tables.
struct LceView {
    const LceIndex* lce;
    bool rev = false;

    Pos n() const { return lce->n(); }
    Pos lcp(Pos i, Pos j) const { return rev ? lce->lcp_rev(i, j) : lce->lcp(i, j); }
    Pos lcs(Pos i, Pos j) const { return rev ? lce->lcs_rev(i, j) : lce->lcs(i, j); }
};

/// Occurrence positions {s + j*d : 0 <= j < count}. d is the factor's
/// period when count > 1; singletons carry the sentinel d = 0.
struct ArithmeticProgression {
    Pos s = 0;
    Pos e = 0;
    Pos d = 0;
    Pos count = 1;

    Pos pos_at(Pos j) const { return s + j * d; }
};

/// Periodic occurrences representation: per depth-q leaf, the occurrence
/// set of its factor as O(n/q) progressions; any multi-element progression
/// lies inside one run and has d = per(factor).
std::vector<std::vector<ArithmeticProgression>> periodic_occurrences(const TrimmedSuffixTree& tree);

/// Compact form of LCP(i, s_j) (or LCS) over a progression: at most three
/// disjoint intervals of j plus one individually evaluated aligned index.
struct LceRep {
    enum class Kind { Const, ArithDown, ArithUp };
    struct Part {
        Pos ja, jb;
        Count base; // value(j) = base, base - j*d, or base + j*d
        Kind kind;
    };

    Pos d = 0;
    Pos count = 0;
    std::vector<Part> parts;
    std::optional<std::pair<Pos, Count>> aligned; // (j*, exact value)

    Count value_at(Pos j) const;
};

/// Lemma-style O(1)-query evaluation of LCP(i, s_j) for all j.
/// Multi-element progressions must lie inside one run with period d
/// (error NotARun, validated when ONEMAP_VALIDATE_RUNS is on).
LceRep repetitive_lcp(const ArithmeticProgression& a, Pos i, const LceView& view);

/// Mirror: LCS(i, s_j) for all j, via the reflected text.
LceRep repetitive_lcs(const ArithmeticProgression& a, Pos i, const LceView& view);

/// Piecewise description over j of the rightward reach from an anchor
/// alignment with one mismatch allowed:
///   r1 = lcp(s_j, anchor), r = min(r1 + 1 + lcp(s_j+r1+1, anchor+r1+1), n+1-s_j).
/// The cap drops windows that would run past the text end. Slopes are in
/// units of d: r1, r never increase (slope 0 or -1).
struct ExtentPiece {
    Pos ja, jb;
    Count r1;
    int r1_slope; // 0 or -1
    Count r;
    int r_slope; // 0 or -1
};
std::vector<ExtentPiece> right_extension_pieces(const ArithmeticProgression& a, Pos anchor,
                                                const LceView& view);

/// Exact leftward reach l_j = LCS(anchor-1, s_j-1): slope 0 or +1.
struct LeftPiece {
    Pos ja, jb;
    Count l;
    int l_slope; // 0 or +1
};
std::vector<LeftPiece> left_extension_pieces(const ArithmeticProgression& a, Pos anchor,
                                             const LceView& view);

/// Warm-up counter: number of j with HD(S[i..i+m-1], S[j..j+m-1]) <= 1,
/// j = i included, evaluated from the periodic representations of the two
/// window halves in O(n/m) progression work per call.
class SingleWordCounter {
public:
    SingleWordCounter(const Text& text, Pos m, const LceIndex& lce);

    Count count(Pos i) const;
    Pos m() const { return m_; }

private:
    Count count_side(const LceView& view, const TrimmedSuffixTree& tree,
                     const std::vector<std::vector<ArithmeticProgression>>& progs, Pos start) const;

    const LceIndex* lce_;
    Pos n_, m_, half_left_, half_right_;
    std::optional<TrimmedSuffixTree> fwd_half_, rev_half_, full_;
    std::vector<std::vector<ArithmeticProgression>> fwd_progs_, rev_progs_;
    Text rev_text_;
};

} // namespace onemap
