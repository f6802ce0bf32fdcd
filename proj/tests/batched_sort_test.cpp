#include <doctest.h>

#include <random>

#include "onemap/batched_sort.hpp"
#include "onemap/errors.hpp"
#include "test_util.hpp"

using namespace onemap;
using namespace onemap::testutil;

TEST_CASE("one request sorts by suffix order") {
    Text t = make_text("banana");
    SuffixArray sa = build_suffix_array(t);
    BatchedSuffixSorter sorter(sa, t.n);
    BatchedSuffixSorter::Request req;
    for (Pos key : {3, 1, 5}) req.items.emplace_back(key, key);
    sorter.add(std::move(req));
    sorter.flush();
    auto out = sorter.take();
    CHECK(out[0].sorted == std::vector<std::int32_t>{1, 5, 3}); // banana < na < nana

    BatchedSuffixSorter::Request single;
    single.items.emplace_back(4, 42);
    sorter.add(std::move(single));
    sorter.flush();
    CHECK(sorter.take()[0].sorted == std::vector<std::int32_t>{42});
}

TEST_CASE("empty suffix sorts first and bad keys throw") {
    Text t = make_text("abc");
    SuffixArray sa = build_suffix_array(t);
    BatchedSuffixSorter sorter(sa, t.n);
    BatchedSuffixSorter::Request req;
    req.items.emplace_back(2, 1); // "bc"
    req.items.emplace_back(4, 2); // empty suffix
    req.items.emplace_back(1, 3); // "abc"
    sorter.add(std::move(req));
    sorter.flush();
    CHECK(sorter.take()[0].sorted == std::vector<std::int32_t>{2, 3, 1});

    BatchedSuffixSorter::Request bad;
    bad.items.emplace_back(5, 0);
    CHECK_THROWS_AS(sorter.add(std::move(bad)), Error);
}

TEST_CASE("interleaved requests sort independently in one pass") {
    std::mt19937 rng(41);
    for (int tc = 0; tc < 30; ++tc) {
        Text t = random_text(rng, 30 + static_cast<Pos>(rng() % 200), 3);
        SuffixArray sa = build_suffix_array(t);
        BatchedSuffixSorter sorter(sa, t.n);
        int reqs = 2 + static_cast<int>(rng() % 4);
        std::vector<std::vector<Pos>> keys(static_cast<size_t>(reqs));
        for (int r = 0; r < reqs; ++r) {
            BatchedSuffixSorter::Request req;
            int k = 1 + static_cast<int>(rng() % 20);
            for (int x = 0; x < k; ++x) {
                Pos key = 1 + static_cast<Pos>(rng() % (t.n + 1));
                keys[static_cast<size_t>(r)].push_back(key);
                req.items.emplace_back(key, static_cast<std::int32_t>(x));
            }
            sorter.add(std::move(req));
        }
        sorter.flush();
        auto out = sorter.take();
        for (int r = 0; r < reqs; ++r) {
            auto naive = keys[static_cast<size_t>(r)];
            std::vector<int> idx(naive.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
            std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
                Pos a = naive[static_cast<size_t>(x)], b = naive[static_cast<size_t>(y)];
                Pos l = a > t.n || b > t.n ? 0 : naive_lcp(t, a, b);
                bool a_end = a + l > t.n, b_end = b + l > t.n;
                if (a_end || b_end) return a_end && !b_end;
                return t.at(a + l) < t.at(b + l);
            });
            for (size_t i = 0; i < idx.size(); ++i) {
                // equal keys may come in any order; compare key suffixes
                Pos got = naive[static_cast<size_t>(out[static_cast<size_t>(r)].sorted[i])];
                Pos want = naive[static_cast<size_t>(idx[i])];
                Pos l = got > t.n || want > t.n ? 0 : naive_lcp(t, got, want);
                bool same = (got > t.n && want > t.n) || (got + l > t.n && want + l > t.n);
                CHECK(same);
            }
        }
    }
}
