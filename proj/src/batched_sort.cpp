#include "onemap/batched_sort.hpp"

#include "onemap/errors.hpp"

namespace onemap {

void BatchedSuffixSorter::add(Request&& req) {
    for (const auto& [key, payload] : req.items) {
        (void)payload;
        if (key < 1 || key > n_ + 1)
            throw_error(Errc::OffsetPastEnd, "sort key must lie in [1, n+1]");
    }
    pending_members_ += static_cast<Count>(req.items.size());
    req.sorted.clear();
    pending_.push_back(std::move(req));
}

void BatchedSuffixSorter::flush() {
    if (pending_.empty()) return;
    batch_sizes_.push_back(pending_members_);

    // CSR bucket of (request, item) pairs by key position; head[n+2] stays
    // at the total so every bucket can read its end at head[key+1]
    std::vector<Pos> head(static_cast<size_t>(n_) + 3, 0);
    for (const auto& r : pending_)
        for (const auto& [key, payload] : r.items) head[static_cast<size_t>(key)]++;
    for (size_t i = 1; i < head.size(); ++i) head[i] += head[i - 1];
    std::vector<std::pair<std::int32_t, std::int32_t>> slot(static_cast<size_t>(pending_members_));
    for (std::int32_t ri = static_cast<std::int32_t>(pending_.size()) - 1; ri >= 0; --ri) {
        auto& r = pending_[static_cast<size_t>(ri)];
        r.sorted.reserve(r.items.size());
        for (auto it = r.items.rbegin(); it != r.items.rend(); ++it)
            slot[static_cast<size_t>(--head[static_cast<size_t>(it->first)])] = {ri, it->second};
    }

    auto emit_key = [&](Pos key) {
        Pos lo = head[static_cast<size_t>(key)];
        Pos hi = head[static_cast<size_t>(key) + 1];
        for (Pos k = lo; k < hi; ++k)
            pending_[static_cast<size_t>(slot[static_cast<size_t>(k)].first)].sorted.push_back(
                slot[static_cast<size_t>(k)].second);
    };
    emit_key(n_ + 1); // empty suffix first
    for (Pos r = 0; r < n_; ++r) emit_key(sa_->sa[r]);
    pending_members_ = 0;
}

} // namespace onemap
