#pragma once

#include <cstdint>
#include <vector>

#include "onemap/lce.hpp"
#include "onemap/mappability.hpp"
#include "onemap/periodic.hpp"
#include "onemap/text.hpp"

namespace onemap {

struct LargeMStats {
    Count batches = 0;            // processed window batches over both passes
    Count updates = 0;            // stairs + interval updates in total
    Count max_updates_per_batch = 0;
};

struct LargeMOptions {
    bool parallel = true; // one batch per task; batches write disjoint windows
};

/// Batch algorithm for m >= 8: windows grouped q = floor(m/4) + 1 at a time
/// around a shared quarter-length anchor, occurrence progressions converted
/// to O(1) stairs/interval updates, O(n^2/m^2 + n) total.
MappabilityVector one_mappability_large_m(const Text& text, Pos m);
MappabilityVector one_mappability_large_m(const Text& text, Pos m, const LceIndex& lce,
                                          LargeMStats* stats = nullptr,
                                          const LargeMOptions& opt = {});

/// Test hook: the stairs/interval updates one occurrence progression of the
/// anchor at `anchor_pos` contributes for window offsets t in [0..q], given
/// the exact-prefix length `half`. Returned as oracle-style updates over the
/// 1-based counter range [1..q+1] (counter t+1 holds offset t).
struct ClusterUpdate {
    enum class Kind { IncreasingStairs, DecreasingStairs, Interval };
    Kind kind;
    std::int32_t a, b;
    std::int64_t value; // stairs: +1/-1 sign; interval: added amount
};
std::vector<ClusterUpdate> updates_from_cluster(const ArithmeticProgression& a, Pos anchor_pos,
                                                Pos m, Pos q, Pos half, const LceView& view);

} // namespace onemap
