#pragma once

#include <cstdint>
#include <vector>

#include "onemap/suffix_array.hpp"
#include "onemap/text.hpp"

namespace onemap {

/// Sorts many independent lists of suffix keys with a single left-to-right
/// pass over the suffix array, O(n + total members) per flush. A key is the
/// 1-based start of the suffix to sort by; n+1 denotes the empty suffix and
/// sorts first. Ties keep insertion order within a request.
class BatchedSuffixSorter {
public:
    struct Request {
        std::vector<std::pair<Pos, std::int32_t>> items; // (key position, payload)
        std::vector<std::int32_t> sorted;                // payloads, filled by flush()
        std::int64_t tag = 0;                            // caller bookkeeping
    };

    BatchedSuffixSorter(const SuffixArray& sa, Pos n) : sa_(&sa), n_(n) {}

    /// Throws OffsetPastEnd for keys outside [1, n+1].
    void add(Request&& req);

    Count pending_members() const { return pending_members_; }
    bool has_pending() const { return !pending_.empty(); }

    /// Sorts every pending request; results readable via take().
    void flush();
    std::vector<Request> take() { return std::move(pending_); }

    const std::vector<Count>& batch_sizes() const { return batch_sizes_; }

private:
    const SuffixArray* sa_;
    Pos n_;
    std::vector<Request> pending_;
    Count pending_members_ = 0;
    std::vector<Count> batch_sizes_;
};

} // namespace onemap
