#pragma once

#include <cstdint>
#include <vector>

namespace onemap {

/// t counters under O(1) stairs updates of one fixed width p, plus interval
/// increments; report_all() replays everything in O(t + updates).
///
/// An increasing stairs update (a,b,+1) adds 1 over the first p counters of
/// the span [a..b], 2 over the next p, and so on; the trailing partial step
/// gets floor((b-a+1)/p)+1. A decreasing update mirrors it with the lowest
/// step adjacent to b. Negative variants subtract instead.
class StairsCounters {
public:
    StairsCounters(std::int32_t t, std::int32_t p);

    std::int32_t size() const { return t_; }
    std::int32_t width() const { return p_; }
    std::int64_t update_count() const { return updates_; }

    void apply_increasing(std::int32_t a, std::int32_t b, int sign);
    void apply_decreasing(std::int32_t a, std::int32_t b, int sign);
    void apply_interval(std::int32_t a, std::int32_t b, std::int64_t x);

    /// Non-destructive; two consecutive calls return identical vectors.
    std::vector<std::int64_t> report_all() const;

private:
    struct EndEntry {
        std::int64_t top;   // value the update contributes at its last index
        std::int32_t rem;   // start index mod p
        std::int32_t sign;
    };
    struct Side {
        std::vector<std::int64_t> start;        // indexed 1..t
        std::vector<std::vector<EndEntry>> end; // indexed 1..t
    };

    void push(Side& side, std::int32_t a, std::int32_t b, int sign);
    void sweep(const Side& side, std::vector<std::int64_t>& acc, bool reversed) const;

    std::int32_t t_, p_;
    std::int64_t updates_ = 0;
    Side inc_;
    Side dec_; // decreasing updates stored as increasing on the reversed axis
    std::vector<std::int64_t> diff_;
};

} // namespace onemap
