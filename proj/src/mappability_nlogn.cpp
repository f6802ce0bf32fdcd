#include "onemap/mappability_nlogn.hpp"

#include <algorithm>
#include <cassert>

#include "onemap/batched_sort.hpp"
#include "onemap/errors.hpp"
#include "onemap/heavy_path.hpp"
#include "onemap/trimmed_tree.hpp"

namespace onemap {

namespace {

using NodeId = TrimmedSuffixTree::NodeId;

// members of one pending light-pass job: sidetree leaves of a single path
// node, to be sorted by the suffix right after the mismatch position
struct LightJob {
    Pos depth; // |w_i| of the path node
    std::vector<std::pair<NodeId, Pos>> members; // (leaf, canonical occurrence)
};

struct HeavyMember {
    NodeId leaf;
    Pos occ;        // canonical occurrence j_z
    Pos mism;       // mismatch index |w_i|+1 of the P-heavy word
    Symbol heavy;   // d_i, the substituted symbol
    Pos bucket_l;   // lcp(hw(z), w_x), filled by the partition
    int order;      // -1,0,+1 against w_x
};

struct HeavyPath {
    NodeId head;
    Pos depth_x;  // |w_x|
    Pos occ_x;    // canonical occurrence of w_x
    std::vector<HeavyMember> members;
};

class Engine {
public:
    Engine(const Text& text, Pos m, const LceIndex& lce, NlognStats* stats, const PairAudit* audit)
        : text_(text),
          m_(m),
          lce_(lce),
          tree_(text, m, lce.fwd_sa(), lce.fwd_lcp_array()),
          hpd_(tree_),
          sorter_(lce.fwd_sa(), text.n),
          stats_(stats),
          audit_(audit) {
        counters_.assign(static_cast<size_t>(tree_.node_count()), 0);
    }

    MappabilityVector run() {
        light_pass();
        heavy_pass();

        MappabilityVector out;
        out.m = m_;
        const Pos w = text_.n - m_ + 1;
        out.exact.assign(static_cast<size_t>(w), 0);
        out.one_mismatch.assign(static_cast<size_t>(w), 0);
        out.total_le1.assign(static_cast<size_t>(w), 0);
        for (NodeId v = 0; v < tree_.node_count(); ++v) {
            if (!tree_.is_leaf(v)) continue;
            Count ex = tree_.occ_count(v);
            Count mm = counters_[static_cast<size_t>(v)];
            for (Pos p : tree_.occ_list(v)) {
                out.exact[static_cast<size_t>(p) - 1] = ex;
                out.one_mismatch[static_cast<size_t>(p) - 1] = mm;
                out.total_le1[static_cast<size_t>(p) - 1] = ex + mm;
            }
        }
        return out;
    }

private:
    void bump(NodeId z, NodeId partner) {
        counters_[static_cast<size_t>(z)] += tree_.occ_count(partner);
        if (audit_ && *audit_) (*audit_)(z, partner);
    }

    // ---- P-light occurrences -------------------------------------------

    void light_pass() {
        for (Pos pi = 0; pi < hpd_.path_count(); ++pi) {
            for (NodeId u : hpd_.path(pi)) {
                auto side = hpd_.sidetree_leaves(u);
                if (side.empty()) continue;
                LightJob job;
                job.depth = tree_.node(u).depth;
                BatchedSuffixSorter::Request req;
                req.tag = static_cast<std::int64_t>(light_jobs_.size());
                job.members.reserve(side.size());
                req.items.reserve(side.size());
                for (const auto& sl : side) {
                    std::int32_t idx = static_cast<std::int32_t>(job.members.size());
                    job.members.emplace_back(sl.leaf, sl.occurrence);
                    req.items.emplace_back(sl.occurrence + job.depth + 1, idx);
                }
                light_jobs_.push_back(std::move(job));
                sorter_.add(std::move(req));
                if (sorter_.pending_members() >= text_.n) drain_light();
            }
        }
        drain_light();
    }

    void drain_light() {
        if (!sorter_.has_pending()) return;
        sorter_.flush();
        for (auto& req : sorter_.take()) {
            const LightJob& job = light_jobs_[static_cast<size_t>(req.tag)];
            process_light(job, req.sorted);
        }
        light_jobs_.clear();
    }

    void process_light(const LightJob& job, const std::vector<std::int32_t>& order) {
        // group maximal runs whose suffixes past the mismatch agree for the
        // remaining m - depth - 1 symbols
        const Pos tail = m_ - job.depth - 1;
        auto key = [&](std::int32_t idx) { return job.members[static_cast<size_t>(idx)].second + job.depth + 1; };
        size_t g = 0;
        while (g < order.size()) {
            size_t h = g + 1;
            while (h < order.size() && lce_.lcp(key(order[h - 1]), key(order[h])) >= tail) ++h;
            if (h - g > 1) {
                Count oc = 0;
                for (size_t k = g; k < h; ++k) oc += tree_.occ_count(job.members[static_cast<size_t>(order[k])].first);
                for (size_t k = g; k < h; ++k) {
                    NodeId z = job.members[static_cast<size_t>(order[k])].first;
                    counters_[static_cast<size_t>(z)] += oc - tree_.occ_count(z);
                    if (audit_ && *audit_) {
                        for (size_t k2 = g; k2 < h; ++k2) {
                            NodeId z2 = job.members[static_cast<size_t>(order[k2])].first;
                            if (z2 != z) (*audit_)(z, z2);
                        }
                    }
                }
            }
            g = h;
        }
    }

    // ---- P-heavy occurrences -------------------------------------------

    void heavy_pass() {
        Count pending = 0;
        for (Pos pi = 0; pi < hpd_.path_count(); ++pi) {
            const auto& path = hpd_.path(pi);
            if (path.size() < 2) continue;
            HeavyPath rec;
            rec.head = path.front();
            rec.depth_x = tree_.node(path.back()).depth;
            rec.occ_x = tree_.canonical_occ(path.back());
            for (size_t k = 0; k + 1 < path.size(); ++k) {
                NodeId u = path[k];
                Pos depth = tree_.node(u).depth;
                Symbol d_sym = hpd_.heavy_symbol(u);
                for (const auto& sl : hpd_.sidetree_leaves(u))
                    rec.members.push_back({sl.leaf, sl.occurrence, depth + 1, d_sym, 0, 0});
            }
            if (rec.members.empty()) continue;
            pending += static_cast<Count>(rec.members.size());
            heavy_paths_.push_back(std::move(rec));
            if (pending >= text_.n) {
                flush_heavy(pending);
                pending = 0;
            }
        }
        if (pending > 0) flush_heavy(pending);
    }

    void flush_heavy(Count batch_size) {
        if (stats_) stats_->partition_batch_sizes.push_back(batch_size);

        // LCP partition: bucket members by l_z = lcp(hw(z), w_x), with the
        // comparison outcome against w_x at symbol l_z+1
        struct BucketJob {
            size_t path_idx;
            Pos l;
            int order;
        };
        std::vector<BucketJob> jobs;
        std::vector<std::vector<std::int32_t>> bucket_of(heavy_paths_.size());
        for (size_t pi = 0; pi < heavy_paths_.size(); ++pi) {
            HeavyPath& hp = heavy_paths_[pi];
            for (auto& mb : hp.members) {
                Count l = std::min<Count>(mb.mism + lce_.lcp(mb.occ + mb.mism, hp.occ_x + mb.mism),
                                          hp.depth_x);
                mb.bucket_l = static_cast<Pos>(l);
                if (l == hp.depth_x) {
                    mb.order = 0;
                } else {
                    // hw(z)[l+1] is past the substituted index, so it reads from L(z)
                    Symbol a = text_.at(mb.occ + static_cast<Pos>(l));
                    Symbol b = text_.at(hp.occ_x + static_cast<Pos>(l));
                    mb.order = a < b ? -1 : 1;
                }
            }
            // one sort request per nonempty (l, order) bucket, keyed by the
            // suffix of L(z) starting right after the common prefix with w_x
            std::vector<std::int32_t> idx(hp.members.size());
            for (size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<std::int32_t>(k);
            std::sort(idx.begin(), idx.end(), [&](std::int32_t x, std::int32_t y) {
                const auto& mx = hp.members[static_cast<size_t>(x)];
                const auto& my = hp.members[static_cast<size_t>(y)];
                if (mx.bucket_l != my.bucket_l) return mx.bucket_l < my.bucket_l;
                return mx.order < my.order;
            });
            size_t g = 0;
            while (g < idx.size()) {
                const auto& first = hp.members[static_cast<size_t>(idx[g])];
                size_t h = g;
                BatchedSuffixSorter::Request req;
                req.tag = static_cast<std::int64_t>(jobs.size());
                while (h < idx.size()) {
                    const auto& mb = hp.members[static_cast<size_t>(idx[h])];
                    if (mb.bucket_l != first.bucket_l || mb.order != first.order) break;
                    req.items.emplace_back(mb.occ + first.bucket_l, idx[h]);
                    ++h;
                }
                jobs.push_back({pi, first.bucket_l, first.order});
                sorter_.add(std::move(req));
                g = h;
            }
        }
        sorter_.flush();
        auto requests = sorter_.take();

        // concatenate: '<' buckets by increasing l, the '=' bucket, then '>'
        // buckets by decreasing l gives the sorted P-heavy word list
        std::vector<std::vector<std::int32_t>> lists(heavy_paths_.size());
        std::vector<std::vector<size_t>> by_path(heavy_paths_.size());
        for (size_t r = 0; r < requests.size(); ++r) by_path[jobs[static_cast<size_t>(requests[r].tag)].path_idx].push_back(r);
        for (size_t pi = 0; pi < heavy_paths_.size(); ++pi) {
            auto& reqs = by_path[pi];
            std::sort(reqs.begin(), reqs.end(), [&](size_t x, size_t y) {
                const BucketJob& jx = jobs[static_cast<size_t>(requests[x].tag)];
                const BucketJob& jy = jobs[static_cast<size_t>(requests[y].tag)];
                if (jx.order != jy.order) return jx.order < jy.order;
                return jx.order <= 0 ? jx.l < jy.l : jx.l > jy.l;
            });
            for (size_t r : reqs)
                lists[pi].insert(lists[pi].end(), requests[r].sorted.begin(), requests[r].sorted.end());
        }

        for (size_t pi = 0; pi < heavy_paths_.size(); ++pi) count_p_heavy(heavy_paths_[pi], lists[pi]);
        heavy_paths_.clear();
    }

    // -1,0,+1 of hw(z) against L(z'), via two lcp queries around the
    // substituted index ("kangaroo" jumps)
    int compare_heavy_word(const HeavyMember& mb, Pos occ2) const {
        Count a1 = std::min<Count>(lce_.lcp(mb.occ, occ2), mb.mism - 1);
        if (a1 < mb.mism - 1) {
            Symbol x = text_.at(mb.occ + static_cast<Pos>(a1));
            Symbol y = text_.at(occ2 + static_cast<Pos>(a1));
            return x < y ? -1 : 1;
        }
        Symbol y = text_.at(occ2 + mb.mism - 1);
        if (mb.heavy != y) return mb.heavy < y ? -1 : 1;
        Count a2 = mb.mism + lce_.lcp(mb.occ + mb.mism, occ2 + mb.mism);
        if (a2 >= m_) return 0;
        Symbol x2 = text_.at(mb.occ + static_cast<Pos>(a2));
        Symbol y2 = text_.at(occ2 + static_cast<Pos>(a2));
        return x2 < y2 ? -1 : 1;
    }

    void count_p_heavy(const HeavyPath& hp, const std::vector<std::int32_t>& sorted_words) {
        if (sorted_words.empty()) return;
        std::vector<NodeId> leaves = tree_.leaves_below(hp.head);
        size_t i = 0, j = 0;
        while (i < sorted_words.size() && j < leaves.size()) {
            const HeavyMember& mb = hp.members[static_cast<size_t>(sorted_words[i])];
            NodeId z2 = leaves[j];
            int cmp = compare_heavy_word(mb, tree_.canonical_occ(z2));
            if (cmp == 0) {
                bump(mb.leaf, z2);
                bump(z2, mb.leaf);
                ++i; // duplicates in the word list must keep matching z2
            } else if (cmp < 0) {
                ++i;
            } else {
                ++j;
            }
        }
    }

public:
    const std::vector<Count>& sort_batch_sizes() const { return sorter_.batch_sizes(); }

private:
    const Text& text_;
    Pos m_;
    const LceIndex& lce_;
    TrimmedSuffixTree tree_;
    HeavyPathDecomposition hpd_;
    BatchedSuffixSorter sorter_;
    NlognStats* stats_;
    const PairAudit* audit_;
    std::vector<Count> counters_;
    std::vector<LightJob> light_jobs_;
    std::vector<HeavyPath> heavy_paths_;
};

} // namespace

MappabilityVector one_mappability_nlogn(const Text& text, Pos m, const LceIndex& lce,
                                        NlognStats* stats, const PairAudit* audit) {
    if (m < 1 || m > text.n) throw_error(Errc::BadWindowLength, "need 1 <= m <= n");
    Engine eng(text, m, lce, stats, audit);
    MappabilityVector out = eng.run();
    if (stats) stats->sort_batch_sizes = eng.sort_batch_sizes();
    return out;
}

MappabilityVector one_mappability_nlogn(const Text& text, Pos m) {
    LceIndex lce(text, build_suffix_array(text));
    return one_mappability_nlogn(text, m, lce);
}

} // namespace onemap
