#pragma once

#include <vector>

#include "onemap/trimmed_tree.hpp"

namespace onemap {

/// Heavy path decomposition of the trimmed suffix tree. An edge (u,v) is
/// heavy iff |I_u| < 2|I_v|, where |I_x| counts the window occurrences in
/// the subtree of x (the length->=m suffix leaves). Every node lies on
/// exactly one path; each path is listed head first (shallowest node).
class HeavyPathDecomposition {
public:
    using NodeId = TrimmedSuffixTree::NodeId;
    static constexpr NodeId kNone = TrimmedSuffixTree::kNone;

    struct SidetreeLeaf {
        Symbol branch_symbol; // symbol of the light edge at the path node
        NodeId leaf;
        Pos occurrence;       // canonical occurrence of L(leaf)
    };

    explicit HeavyPathDecomposition(const TrimmedSuffixTree& tree);

    const TrimmedSuffixTree& tree() const { return *tree_; }
    NodeId heavy_child(NodeId u) const { return heavy_child_[static_cast<size_t>(u)]; }
    /// Symbol d_i of the heavy edge leaving u; only valid when heavy_child(u) != kNone.
    Symbol heavy_symbol(NodeId u) const { return tree_->edge_symbol(heavy_child(u)); }
    bool is_heavy_edge(NodeId parent, NodeId child) const { return heavy_child(parent) == child; }

    Pos path_count() const { return static_cast<Pos>(paths_.size()); }
    const std::vector<NodeId>& path(Pos p) const { return paths_[static_cast<size_t>(p)]; }
    Pos path_of(NodeId u) const { return path_id_[static_cast<size_t>(u)]; }
    Pos pos_in_path(NodeId u) const { return pos_in_path_[static_cast<size_t>(u)]; }

    /// Every depth-m leaf of every light subtree hanging off u, in
    /// lexicographic order, each with one canonical occurrence.
    std::vector<SidetreeLeaf> sidetree_leaves(NodeId u) const;

    /// Number of light edges on the root path of u.
    Pos light_edges_above(NodeId u) const;

private:
    const TrimmedSuffixTree* tree_;
    std::vector<NodeId> heavy_child_;
    std::vector<Pos> path_id_, pos_in_path_;
    std::vector<std::vector<NodeId>> paths_;
};

} // namespace onemap
