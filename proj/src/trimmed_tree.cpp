#include "onemap/trimmed_tree.hpp"

#include <algorithm>
#include <cassert>

#include "onemap/errors.hpp"

namespace onemap {

TrimmedSuffixTree::TrimmedSuffixTree(const Text& text, Pos m, const SuffixArray& sa,
                                     const std::vector<Pos>& lcp)
    : text_(&text), n_(text.n), m_(m) {
    if (m < 1 || m > n_) throw_error(Errc::BadWindowLength, "need 1 <= m <= n");
    const Pos wcount = n_ - m + 1;

    // Window starts in suffix-rank order, with capped lcp between kept neighbors.
    occ_.reserve(wcount);
    std::vector<Pos> blcp; // blcp[g] = min lcp between kept suffix g-1 and g, capped at m
    blcp.reserve(wcount);
    Pos run_min = 0;
    bool have_prev = false;
    for (Pos r = 0; r < n_; ++r) {
        if (have_prev) run_min = std::min(run_min, lcp[r]);
        if (sa.sa[r] <= wcount) {
            if (have_prev) blcp.push_back(std::min(run_min, m));
            occ_.push_back(sa.sa[r]);
            run_min = n_; // reset; next iteration min()s in lcp values
            have_prev = true;
        }
    }

    std::vector<NodeId> last_child(1, kNone);
    auto new_node = [&](Pos depth) {
        nodes_.push_back(Node{kNone, depth, 0, 0, kNone, kNone});
        last_child.push_back(kNone);
        return static_cast<NodeId>(nodes_.size() - 1);
    };
    auto attach = [&](NodeId child, NodeId parent) {
        Node& c = nodes_[static_cast<size_t>(child)];
        Node& p = nodes_[static_cast<size_t>(parent)];
        c.parent = parent;
        if (p.first_child == kNone) {
            p.first_child = child;
            p.occ_begin = c.occ_begin;
        } else {
            nodes_[static_cast<size_t>(last_child[static_cast<size_t>(parent)])].next_sibling = child;
            assert(c.occ_begin == p.occ_end);
        }
        last_child[static_cast<size_t>(parent)] = child;
        p.occ_end = c.occ_end;
    };

    root_ = new_node(0);
    std::vector<NodeId> stack{root_};
    auto top_depth = [&] { return nodes_[static_cast<size_t>(stack.back())].depth; };

    size_t g = 0;
    for (Pos r = 0; r < static_cast<Pos>(occ_.size()); ++r) {
        bool group_start = (r == 0) || blcp[static_cast<size_t>(r) - 1] < m;
        if (!group_start) continue;
        Pos h = (g == 0) ? 0 : blcp[static_cast<size_t>(r) - 1];
        ++g;

        NodeId pending = kNone;
        while (top_depth() > h) {
            NodeId node = stack.back();
            stack.pop_back();
            if (top_depth() >= h)
                attach(node, stack.back());
            else
                pending = node;
        }
        if (top_depth() < h) {
            NodeId u = new_node(h);
            attach(pending, u);
            stack.push_back(u);
        }

        // group extent: from r until the next boundary with blcp < m
        Pos end = r + 1;
        while (end < static_cast<Pos>(occ_.size()) && blcp[static_cast<size_t>(end) - 1] >= m) ++end;
        NodeId leaf = new_node(m);
        nodes_[static_cast<size_t>(leaf)].occ_begin = r;
        nodes_[static_cast<size_t>(leaf)].occ_end = end;
        ++leaf_count_;
        stack.push_back(leaf);
    }
    while (stack.size() > 1) {
        NodeId node = stack.back();
        stack.pop_back();
        attach(node, stack.back());
    }

    window_leaf_.assign(static_cast<size_t>(wcount), kNone);
    for (NodeId v = 0; v < node_count(); ++v) {
        if (!is_leaf(v)) continue;
        for (Pos p : occ_list(v)) window_leaf_[static_cast<size_t>(p) - 1] = v;
    }
}

std::vector<Count> TrimmedSuffixTree::exact_window_counts() const {
    std::vector<Count> out(window_leaf_.size());
    for (size_t i = 0; i < window_leaf_.size(); ++i) out[i] = occ_count(window_leaf_[i]);
    return out;
}

std::vector<TrimmedSuffixTree::NodeId> TrimmedSuffixTree::leaves_below(NodeId u) const {
    std::vector<NodeId> out, stack{u};
    std::vector<NodeId> scratch;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (is_leaf(v)) {
            out.push_back(v);
            continue;
        }
        scratch.clear();
        for_each_child(v, [&](NodeId c) { scratch.push_back(c); });
        stack.insert(stack.end(), scratch.rbegin(), scratch.rend());
    }
    return out;
}

} // namespace onemap
