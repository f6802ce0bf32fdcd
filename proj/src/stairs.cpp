#include "onemap/stairs.hpp"

#include "onemap/errors.hpp"

namespace onemap {

StairsCounters::StairsCounters(std::int32_t t, std::int32_t p) : t_(t), p_(p) {
    if (t < 1 || p < 1 || p > t) throw_error(Errc::BadDimensions, "need t >= 1 and 1 <= p <= t");
    inc_.start.assign(static_cast<size_t>(t) + 1, 0);
    inc_.end.resize(static_cast<size_t>(t) + 1);
    dec_.start.assign(static_cast<size_t>(t) + 1, 0);
    dec_.end.resize(static_cast<size_t>(t) + 1);
    diff_.assign(static_cast<size_t>(t) + 2, 0);
}

void StairsCounters::push(Side& side, std::int32_t a, std::int32_t b, int sign) {
    if (a < 1 || b > t_ || a > b) throw_error(Errc::BadRange, "stairs span must satisfy 1 <= a <= b <= t");
    std::int64_t span = b - a + 1;
    side.start[static_cast<size_t>(a)] += sign;
    side.end[static_cast<size_t>(b)].push_back(EndEntry{(span + p_ - 1) / p_, a % p_, sign});
    ++updates_;
}

void StairsCounters::apply_increasing(std::int32_t a, std::int32_t b, int sign) { push(inc_, a, b, sign); }

void StairsCounters::apply_decreasing(std::int32_t a, std::int32_t b, int sign) {
    if (a < 1 || b > t_ || a > b) throw_error(Errc::BadRange, "stairs span must satisfy 1 <= a <= b <= t");
    push(dec_, t_ + 1 - b, t_ + 1 - a, sign);
}

void StairsCounters::apply_interval(std::int32_t a, std::int32_t b, std::int64_t x) {
    if (a < 1 || b > t_ || a > b) throw_error(Errc::BadRange, "interval must satisfy 1 <= a <= b <= t");
    diff_[static_cast<size_t>(a)] += x;
    diff_[static_cast<size_t>(b) + 1] -= x;
    ++updates_;
}

void StairsCounters::sweep(const Side& side, std::vector<std::int64_t>& acc, bool reversed) const {
    std::vector<std::int64_t> rem(static_cast<size_t>(p_), 0);
    std::int64_t c = 0;
    for (std::int32_t i = 1; i <= t_; ++i) {
        rem[static_cast<size_t>(i % p_)] += side.start[static_cast<size_t>(i)];
        c += rem[static_cast<size_t>(i % p_)];
        acc[static_cast<size_t>(reversed ? t_ + 1 - i : i) - 1] += c;
        for (const EndEntry& e : side.end[static_cast<size_t>(i)]) {
            rem[static_cast<size_t>(e.rem)] -= e.sign;
            c -= e.sign * e.top;
        }
    }
}

std::vector<std::int64_t> StairsCounters::report_all() const {
    std::vector<std::int64_t> out(static_cast<size_t>(t_), 0);
    sweep(inc_, out, false);
    sweep(dec_, out, true);
    std::int64_t run = 0;
    for (std::int32_t i = 1; i <= t_; ++i) {
        run += diff_[static_cast<size_t>(i)];
        out[static_cast<size_t>(i) - 1] += run;
    }
    return out;
}

} // namespace onemap
