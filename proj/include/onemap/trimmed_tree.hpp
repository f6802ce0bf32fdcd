#pragma once

#include <span>
#include <vector>

#include "onemap/suffix_array.hpp"
#include "onemap/text.hpp"

namespace onemap {

/// Suffix tree cut at string depth m. Depth-m implicit nodes are explicit
/// leaves, one per distinct length-m factor. Nodes with no full-length
/// window below (stubs from short suffixes) are not materialized.
///
/// Occurrences are window starts, stored once in a flat array ordered by
/// suffix rank; every node addresses its own occurrences as a span of it,
/// so occ_count(u) == sum over children by construction.
class TrimmedSuffixTree {
public:
    using NodeId = std::int32_t;
    static constexpr NodeId kNone = -1;

    struct Node {
        NodeId parent = kNone;
        Pos depth = 0;          // |L(v)|, <= m
        Pos occ_begin = 0;      // span into occurrence array
        Pos occ_end = 0;
        NodeId first_child = kNone;
        NodeId next_sibling = kNone; // children chained in sorted symbol order
    };

    TrimmedSuffixTree(const Text& text, Pos m, const SuffixArray& sa, const std::vector<Pos>& lcp);

    Pos m() const { return m_; }
    Pos n() const { return n_; }
    NodeId root() const { return root_; }
    Pos node_count() const { return static_cast<Pos>(nodes_.size()); }
    const Node& node(NodeId v) const { return nodes_[static_cast<size_t>(v)]; }

    bool is_leaf(NodeId v) const { return node(v).depth == m_; }
    Pos leaf_count() const { return leaf_count_; }

    Count occ_count(NodeId v) const { return node(v).occ_end - node(v).occ_begin; }
    std::span<const Pos> occ_list(NodeId v) const {
        const Node& nd = node(v);
        return {occ_.data() + nd.occ_begin, static_cast<size_t>(nd.occ_end - nd.occ_begin)};
    }
    /// Canonical occurrence of L(v): the first of its list.
    Pos canonical_occ(NodeId v) const { return occ_[static_cast<size_t>(node(v).occ_begin)]; }

    /// First symbol of the edge entering v (v != root).
    Symbol edge_symbol(NodeId v) const {
        return text_->at(canonical_occ(v) + node(node(v).parent).depth);
    }
    /// Edge label of the edge entering v as a (start, length) slice of the text.
    std::pair<Pos, Pos> edge_slice(NodeId v) const {
        const Node& nd = node(v);
        Pos pdepth = node(nd.parent).depth;
        return {canonical_occ(v) + pdepth, nd.depth - pdepth};
    }

    /// Depth-m leaf whose locus is S[i..i+m-1], for window start i.
    NodeId leaf_of_window(Pos i) const { return window_leaf_[static_cast<size_t>(i) - 1]; }

    /// Exact per-window occurrence counts (self included), index i-1 for window i.
    std::vector<Count> exact_window_counts() const;

    template <class Fn>
    void for_each_child(NodeId u, Fn&& fn) const {
        for (NodeId c = node(u).first_child; c != kNone; c = node(c).next_sibling) fn(c);
    }

    /// Depth-m leaves below u in lexicographic (DFS) order.
    std::vector<NodeId> leaves_below(NodeId u) const;

private:
    const Text* text_;
    Pos n_ = 0, m_ = 0;
    NodeId root_ = 0;
    Pos leaf_count_ = 0;
    std::vector<Node> nodes_;
    std::vector<Pos> occ_;          // window starts in suffix-rank order
    std::vector<NodeId> window_leaf_;
};

} // namespace onemap
