#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "onemap/errors.hpp"
#include "onemap/lce.hpp"
#include "onemap/suffix_array.hpp"
#include "onemap/trimmed_tree.hpp"
#include "test_util.hpp"

using namespace onemap;
using namespace onemap::testutil;

namespace {

LceIndex make_lce(const Text& t) { return LceIndex(t, build_suffix_array(t)); }

std::map<std::vector<Symbol>, std::vector<Pos>> window_map(const Text& t, Pos m) {
    std::map<std::vector<Symbol>, std::vector<Pos>> out;
    for (Pos i = 1; i + m - 1 <= t.n; ++i)
        out[{t.data.begin() + i - 1, t.data.begin() + i - 1 + m}].push_back(i);
    return out;
}

} // namespace

TEST_CASE("suffix array on small inputs") {
    CHECK(build_suffix_array(make_text("banana")).sa == std::vector<Pos>{6, 4, 2, 1, 5, 3});
    CHECK(build_suffix_array(make_text("a")).sa == std::vector<Pos>{1});
    CHECK(build_suffix_array(make_text("aaa")).sa == std::vector<Pos>{3, 2, 1});
    CHECK_THROWS_AS(build_suffix_array(make_text("")), Error);
}

TEST_CASE("suffix array is a sorted permutation on random texts") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        Text t = random_text(rng, 1 + static_cast<Pos>(rng() % 300), it % 2 ? 2 : 5);
        SuffixArray sa = build_suffix_array(t);
        std::vector<bool> seen(static_cast<size_t>(t.n) + 1, false);
        for (Pos p : sa.sa) {
            CHECK(!seen[static_cast<size_t>(p)]);
            seen[static_cast<size_t>(p)] = true;
        }
        for (Pos r = 1; r < t.n; ++r) {
            Pos a = sa.sa[r - 1], b = sa.sa[r];
            Pos l = naive_lcp(t, a, b);
            // strict order: mismatch within range or a is a proper prefix
            bool prefix = a + l > t.n;
            CHECK((prefix || t.at(a + l) < t.at(b + l)));
            CHECK(sa.rank_of(sa.sa[r]) == r);
        }
    }
}

TEST_CASE("lce queries match the spec examples") {
    Text ban = make_text("banana");
    LceIndex lce = make_lce(ban);
    CHECK(lce.lcp_query(2, 4) == 3);
    CHECK(lce.lcp_query(1, 3) == 0);
    CHECK(lce.lcp_query(3, 3) == 4);
    CHECK(lce.lcs_query(4, 6) == 3);
    CHECK(lce.lcs_query(1, 2) == 0);
    CHECK(lce.lcs_query(5, 5) == 5);
    CHECK_THROWS_AS(lce.lcp_query(0, 1), Error);
    CHECK_THROWS_AS(lce.lcs_query(1, -2), Error);
    CHECK(lce.lcp(7, 1) == 0); // past-the-end starts denote empty suffixes

    Text one = make_text("a");
    CHECK(make_lce(one).lcp_query(1, 1) == 1);
}

TEST_CASE("lce equals character scans on random texts") {
    std::mt19937 rng(12);
    for (int tc = 0; tc < 10; ++tc) {
        Text t = random_text(rng, 50 + static_cast<Pos>(rng() % 200), tc % 3 == 0 ? 2 : 8);
        LceIndex lce = make_lce(t);
        std::uniform_int_distribution<Pos> pick(1, t.n);
        for (int k = 0; k < 1000; ++k) {
            Pos i = pick(rng), j = pick(rng);
            CHECK(lce.lcp_query(i, j) == naive_lcp(t, i, j));
            CHECK(lce.lcs_query(i, j) == naive_lcs(t, i, j));
        }
    }
}

TEST_CASE("trimmed tree on the spec examples") {
    Text t = make_text("aaaa");
    LceIndex lce = make_lce(t);
    TrimmedSuffixTree tree(t, 2, lce.fwd_sa(), lce.fwd_lcp_array());
    CHECK(tree.leaf_count() == 1);
    auto leaf = tree.leaf_of_window(1);
    CHECK(tree.occ_count(leaf) == 3);
    auto occ = tree.occ_list(leaf);
    std::vector<Pos> positions(occ.begin(), occ.end());
    std::sort(positions.begin(), positions.end());
    CHECK(positions == std::vector<Pos>{1, 2, 3});

    Text ab = make_text("abab");
    LceIndex lce2 = make_lce(ab);
    TrimmedSuffixTree tree2(ab, 2, lce2.fwd_sa(), lce2.fwd_lcp_array());
    CHECK(tree2.leaf_count() == 2);
    CHECK(tree2.occ_count(tree2.leaf_of_window(1)) == 2);
    CHECK(tree2.occ_count(tree2.leaf_of_window(2)) == 1);

    Text ban = make_text("banana");
    LceIndex lce3 = make_lce(ban);
    TrimmedSuffixTree tree3(ban, 3, lce3.fwd_sa(), lce3.fwd_lcp_array());
    CHECK(tree3.leaf_count() == 3);
    CHECK(tree3.occ_count(tree3.leaf_of_window(2)) == 2); // "ana"
    CHECK(tree3.occ_count(tree3.leaf_of_window(1)) == 1); // "ban"
    CHECK(tree3.occ_count(tree3.leaf_of_window(3)) == 1); // "nan"

    CHECK_THROWS_AS(TrimmedSuffixTree(ban, 7, lce3.fwd_sa(), lce3.fwd_lcp_array()), Error);
}

TEST_CASE("exact window counts") {
    auto counts = [](const std::string& s, Pos m) {
        Text t = make_text(s);
        LceIndex lce = make_lce(t);
        return TrimmedSuffixTree(t, m, lce.fwd_sa(), lce.fwd_lcp_array()).exact_window_counts();
    };
    CHECK(counts("aaaa", 2) == std::vector<Count>{3, 3, 3});
    CHECK(counts("abab", 2) == std::vector<Count>{2, 1, 2});
    CHECK(counts("abc", 3) == std::vector<Count>{1});
}

TEST_CASE("trimmed tree structure matches a naive window map") {
    std::mt19937 rng(13);
    for (int tc = 0; tc < 30; ++tc) {
        Pos n = 5 + static_cast<Pos>(rng() % 196);
        Text t = random_text(rng, n, tc % 2 ? 2 : 4);
        for (Pos m : {1, 2, 3, n / 2 > 0 ? n / 2 : 1}) {
            if (m > n) continue;
            LceIndex lce = make_lce(t);
            TrimmedSuffixTree tree(t, m, lce.fwd_sa(), lce.fwd_lcp_array());
            auto wm = window_map(t, m);
            CHECK(tree.leaf_count() == static_cast<Pos>(wm.size()));

            Count sum = 0;
            for (TrimmedSuffixTree::NodeId v = 0; v < tree.node_count(); ++v) {
                if (tree.is_leaf(v)) sum += tree.occ_count(v);
                // parent sums and depth bounds
                CHECK(tree.node(v).depth <= m);
                if (!tree.is_leaf(v)) {
                    Count child_sum = 0;
                    tree.for_each_child(v, [&](auto c) { child_sum += tree.occ_count(c); });
                    CHECK(child_sum == tree.occ_count(v));
                }
            }
            CHECK(sum == t.n - m + 1);

            for (auto& [word, positions] : wm) {
                auto leaf = tree.leaf_of_window(positions[0]);
                auto occ = tree.occ_list(leaf);
                std::vector<Pos> got(occ.begin(), occ.end());
                std::sort(got.begin(), got.end());
                CHECK(got == positions);
            }
        }
    }
}

TEST_CASE("children iterate in sorted symbol order") {
    std::mt19937 rng(14);
    Text t = random_text(rng, 120, 4);
    LceIndex lce = make_lce(t);
    TrimmedSuffixTree tree(t, 4, lce.fwd_sa(), lce.fwd_lcp_array());
    for (TrimmedSuffixTree::NodeId v = 0; v < tree.node_count(); ++v) {
        Symbol prev = -1;
        tree.for_each_child(v, [&](auto c) {
            Symbol s = tree.edge_symbol(c);
            CHECK(s > prev);
            prev = s;
        });
    }
}
