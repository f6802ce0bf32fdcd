#include "onemap/heavy_path.hpp"

namespace onemap {

HeavyPathDecomposition::HeavyPathDecomposition(const TrimmedSuffixTree& tree) : tree_(&tree) {
    const Pos nn = tree.node_count();
    heavy_child_.assign(static_cast<size_t>(nn), kNone);
    path_id_.assign(static_cast<size_t>(nn), -1);
    pos_in_path_.assign(static_cast<size_t>(nn), -1);

    for (NodeId u = 0; u < nn; ++u) {
        Count best = -1;
        NodeId best_child = kNone;
        tree.for_each_child(u, [&](NodeId c) {
            Count oc = tree.occ_count(c);
            // children come in sorted symbol order, so on a tie the first
            // (smallest symbol) wins
            if (oc > best) {
                best = oc;
                best_child = c;
            }
        });
        if (best_child != kNone && tree.occ_count(u) < 2 * best) heavy_child_[static_cast<size_t>(u)] = best_child;
    }

    // path heads: the root and every node entered by a light edge
    for (NodeId u = 0; u < nn; ++u) {
        NodeId parent = tree.node(u).parent;
        if (parent != kNone && heavy_child(parent) == u) continue;
        Pos id = static_cast<Pos>(paths_.size());
        paths_.emplace_back();
        for (NodeId v = u; v != kNone; v = heavy_child(v)) {
            path_id_[static_cast<size_t>(v)] = id;
            pos_in_path_[static_cast<size_t>(v)] = static_cast<Pos>(paths_.back().size());
            paths_.back().push_back(v);
        }
    }
}

std::vector<HeavyPathDecomposition::SidetreeLeaf> HeavyPathDecomposition::sidetree_leaves(NodeId u) const {
    std::vector<SidetreeLeaf> out;
    NodeId heavy = heavy_child(u);
    tree_->for_each_child(u, [&](NodeId c) {
        if (c == heavy) return;
        Symbol sym = tree_->edge_symbol(c);
        for (NodeId leaf : tree_->leaves_below(c))
            out.push_back(SidetreeLeaf{sym, leaf, tree_->canonical_occ(leaf)});
    });
    return out;
}

Pos HeavyPathDecomposition::light_edges_above(NodeId u) const {
    Pos cnt = 0;
    for (NodeId v = u; tree_->node(v).parent != kNone; v = tree_->node(v).parent)
        if (heavy_child(tree_->node(v).parent) != v) ++cnt;
    return cnt;
}

} // namespace onemap
