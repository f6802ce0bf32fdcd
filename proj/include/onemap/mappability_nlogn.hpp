#pragma once

#include <functional>
#include <vector>

#include "onemap/lce.hpp"
#include "onemap/mappability.hpp"
#include "onemap/text.hpp"

namespace onemap {

struct NlognStats {
    std::vector<Count> sort_batch_sizes;      // batched suffix sorting flush sizes
    std::vector<Count> partition_batch_sizes; // batched LCP-partition flush sizes
};

/// Test hook: invoked as (z, z') whenever the counter of leaf z is increased
/// by Oc(z'), i.e. once per ordered leaf pair contribution.
using PairAudit = std::function<void(std::int32_t, std::int32_t)>;

/// Heavy-path algorithm: exact counts from the trimmed suffix tree,
/// exactly-one-mismatch counts from the P-light and P-heavy passes,
/// O(n log n) time and linear space on any integer alphabet.
MappabilityVector one_mappability_nlogn(const Text& text, Pos m);
MappabilityVector one_mappability_nlogn(const Text& text, Pos m, const LceIndex& lce,
                                        NlognStats* stats = nullptr,
                                        const PairAudit* audit = nullptr);

} // namespace onemap
