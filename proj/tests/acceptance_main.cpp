// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any fail. The CLI path for the contract checks comes from
// --cli (defaults to ./tools/onemap next to the build dir layout).

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "onemap/heavy_path.hpp"
#include "onemap/lce.hpp"
#include "onemap/mappability_large_m.hpp"
#include "onemap/mappability_nlogn.hpp"
#include "onemap/oracle.hpp"
#include "onemap/periodic.hpp"
#include "onemap/stairs.hpp"
#include "onemap/suffix_array.hpp"
#include "test_util.hpp"

using namespace onemap;
using namespace onemap::testutil;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& note = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::vector<Pos> m_values(Pos n) {
    std::vector<Pos> ms{1, 2, 3, 8};
    ms.push_back(static_cast<Pos>(std::ceil(std::sqrt(static_cast<double>(n)))));
    ms.push_back((n + 1) / 2);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Pos> ok;
    for (Pos m : ms)
        if (m >= 1 && m <= n) ok.push_back(m);
    return ok;
}

bool equal_vectors(const MappabilityVector& a, const MappabilityVector& b) {
    return a.exact == b.exact && a.one_mismatch == b.one_mismatch && a.total_le1 == b.total_le1;
}

Text repeat_text(const std::string& unit, Pos n) {
    std::string s;
    while (static_cast<Pos>(s.size()) < n) s += unit;
    s.resize(static_cast<size_t>(n));
    return make_text(s);
}

// --- criterion 1: nlogn == oracle over the randomized suite ---------------

bool criterion1(std::string& note) {
    auto t0 = clock_type::now();
    std::mt19937 rng(1001);
    const int texts_per_config = 200;
    for (Symbol sigma : {2, 4, 26}) {
        for (Pos n : {50, 200, 1000}) {
            for (int tc = 0; tc < texts_per_config; ++tc) {
                Text t = random_text(rng, n, sigma);
                LceIndex lce(t, build_suffix_array(t));
                for (Pos m : m_values(n)) {
                    auto got = one_mappability_nlogn(t, m, lce);
                    auto ref = oracle::naive_mappability(t, m, 1);
                    if (!equal_vectors(got, ref)) {
                        note = "mismatch at sigma=" + std::to_string(sigma) + " n=" + std::to_string(n) +
                               " m=" + std::to_string(m);
                        return false;
                    }
                }
            }
        }
    }
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    note = std::to_string(secs) + "s";
    return secs < 300.0;
}

// --- criterion 2: large-m == oracle, plus adversarial inputs --------------

bool criterion2(std::string& note) {
    std::mt19937 rng(1002);
    auto check = [&](const Text& t, Pos m) {
        LceIndex lce(t, build_suffix_array(t));
        auto got = one_mappability_large_m(t, m, lce);
        auto ref = oracle::naive_mappability(t, m, 1);
        return equal_vectors(got, ref);
    };
    for (Symbol sigma : {2, 4, 26}) {
        for (Pos n : {50, 200, 1000}) {
            for (int tc = 0; tc < 200; ++tc) {
                Text t = random_text(rng, n, sigma);
                for (Pos m : m_values(n)) {
                    if (m < 8) continue;
                    if (!check(t, m)) {
                        note = "random mismatch n=" + std::to_string(n) + " m=" + std::to_string(m);
                        return false;
                    }
                }
            }
        }
    }
    for (Pos n : {64, 200, 1000}) {
        std::vector<Text> adversarial{repeat_text("a", n), repeat_text("ab", n), repeat_text("abc", n),
                                      fibonacci_text(n)};
        Text planted = repeat_text("a", n);
        planted.data[static_cast<size_t>(n) / 2] = 1;
        planted.alphabet_size = 2;
        adversarial.push_back(planted);
        for (const Text& t : adversarial) {
            for (Pos m : m_values(n)) {
                if (m < 8) continue;
                if (!check(t, m)) {
                    note = "adversarial mismatch n=" + std::to_string(n) + " m=" + std::to_string(m);
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 3: stairs structure ----------------------------------------

bool criterion3(std::string& note) {
    using oracle::StairsUpdate;
    std::mt19937 rng(1003);
    for (int tc = 0; tc < 10000; ++tc) {
        std::int32_t t = 1 + static_cast<std::int32_t>(rng() % 64);
        std::int32_t p = 1 + static_cast<std::int32_t>(rng() % t);
        StairsCounters c(t, p);
        std::vector<StairsUpdate> log;
        int k = 1 + static_cast<int>(rng() % 10);
        for (int u = 0; u < k; ++u) {
            std::int32_t a = 1 + static_cast<std::int32_t>(rng() % t);
            std::int32_t b = a + static_cast<std::int32_t>(rng() % (t - a + 1));
            switch (rng() % 5) {
                case 0:
                    c.apply_increasing(a, b, +1);
                    log.push_back({StairsUpdate::Kind::IncreasingStairs, a, b, +1});
                    break;
                case 1:
                    c.apply_increasing(a, b, -1);
                    log.push_back({StairsUpdate::Kind::IncreasingStairs, a, b, -1});
                    break;
                case 2:
                    c.apply_decreasing(a, b, +1);
                    log.push_back({StairsUpdate::Kind::DecreasingStairs, a, b, +1});
                    break;
                case 3:
                    c.apply_decreasing(a, b, -1);
                    log.push_back({StairsUpdate::Kind::DecreasingStairs, a, b, -1});
                    break;
                default: {
                    std::int64_t x = static_cast<std::int64_t>(rng() % 11) - 5;
                    c.apply_interval(a, b, x);
                    log.push_back({StairsUpdate::Kind::Interval, a, b, x});
                    break;
                }
            }
        }
        if (c.report_all() != oracle::naive_stairs_apply(t, p, log)) {
            note = "differential mismatch at case " + std::to_string(tc);
            return false;
        }
    }
    // the paper's decreasing-stairs example, from the stated intermediate state
    StairsCounters c(11, 2);
    const std::vector<Count> state{0, 0, 1, 1, 2, 2, 3, 3, 4, 0, 0};
    for (std::int32_t i = 0; i < 11; ++i)
        if (state[static_cast<size_t>(i)] != 0) c.apply_interval(i + 1, i + 1, state[static_cast<size_t>(i)]);
    c.apply_decreasing(1, 5, +1);
    if (c.report_all() != std::vector<Count>{3, 2, 3, 2, 3, 2, 3, 3, 4, 0, 0}) {
        note = "worked example differs";
        return false;
    }
    return true;
}

// --- criterion 4: periodic occurrences representation ---------------------

bool criterion4(std::string& note) {
    std::mt19937 rng(1004);
    auto strict_period = [](const Text& t, Pos start, Pos q) {
        for (Pos p = 1; 2 * p <= q; ++p) {
            bool ok = true;
            for (Pos x = 0; x + p < q; ++x)
                if (t.at(start + x) != t.at(start + x + p)) {
                    ok = false;
                    break;
                }
            if (ok) return p;
        }
        return Pos{0};
    };
    for (int tc = 0; tc < 120; ++tc) {
        Pos n = 10 + static_cast<Pos>(rng() % 491);
        Text t = tc % 5 == 0 ? fibonacci_text(n) : random_text(rng, n, tc % 2 ? 2 : 4);
        SuffixArray sa = build_suffix_array(t);
        LceIndex lce(t, sa);
        for (Pos q : {2, 3, 5, 8}) {
            if (q > n) continue;
            TrimmedSuffixTree tree(t, q, lce.fwd_sa(), lce.fwd_lcp_array());
            auto progs = periodic_occurrences(tree);
            auto naive = oracle::naive_periodic_occurrences(t, q);
            for (const auto& [word, positions] : naive) {
                const auto& aps = progs[static_cast<size_t>(tree.leaf_of_window(positions[0]))];
                std::vector<Pos> expanded;
                for (const auto& a : aps)
                    for (Pos j = 0; j < a.count; ++j) expanded.push_back(a.pos_at(j));
                std::sort(expanded.begin(), expanded.end());
                if (expanded != positions) {
                    note = "expansion differs at q=" + std::to_string(q);
                    return false;
                }
                if (static_cast<Count>(aps.size()) > 4 * (static_cast<Count>(n) / q + 1)) {
                    note = "too many progressions";
                    return false;
                }
                Pos per = strict_period(t, positions[0], q);
                for (const auto& a : aps)
                    if (a.count > 1 && a.d != per) {
                        note = "multi-element difference is not the period";
                        return false;
                    }
            }
        }
    }
    return true;
}

// --- criterion 5: repetitive LCE -------------------------------------------

bool criterion5(std::string& note) {
    std::mt19937 rng(1005);
    Count instances = 0;
    while (instances < 10000) {
        Pos n = 30 + static_cast<Pos>(rng() % 300);
        Text t = rng() % 3 == 0 ? repeat_text(rng() % 2 ? "ab" : "aab", n) : random_text(rng, n, 2);
        SuffixArray sa = build_suffix_array(t);
        LceIndex lce(t, sa);
        LceView view{&lce, false};
        Pos q = 2 + static_cast<Pos>(rng() % 7);
        TrimmedSuffixTree tree(t, q, lce.fwd_sa(), lce.fwd_lcp_array());
        auto progs = periodic_occurrences(tree);
        std::uniform_int_distribution<Pos> pick(1, n);
        for (TrimmedSuffixTree::NodeId v = 0; v < tree.node_count(); ++v) {
            if (!tree.is_leaf(v)) continue;
            for (const auto& a : progs[static_cast<size_t>(v)]) {
                Pos i = pick(rng);
                LceRep rl = repetitive_lcp(a, i, view);
                LceRep rs = repetitive_lcs(a, i, view);
                for (Pos j = 0; j < a.count; ++j) {
                    if (rl.value_at(j) != naive_lcp(t, i, a.pos_at(j)) ||
                        rs.value_at(j) != naive_lcs(t, i, a.pos_at(j))) {
                        note = "expansion differs from naive LCE";
                        return false;
                    }
                }
                instances += a.count;
            }
        }
    }
    return true;
}

// --- criterion 6: complexity smoke ------------------------------------------

double run_nlogn_seconds(const Text& t, Pos m) {
    auto t0 = clock_type::now();
    LceIndex lce(t, build_suffix_array(t));
    one_mappability_nlogn(t, m, lce);
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool criterion6(std::string& note) {
    std::mt19937 rng(1006);
    Text big = random_text(rng, 500000, 4);
    Text half(big);
    half.data.resize(250000);
    half.n = 250000;

    // best of two, the smaller size first, so allocator warm-up does not
    // land on one side of the ratio
    double t_half = std::min(run_nlogn_seconds(half, 64), run_nlogn_seconds(half, 64));
    double t_nlogn = std::min(run_nlogn_seconds(big, 64), run_nlogn_seconds(big, 64));

    auto t0 = clock_type::now();
    {
        LceIndex lce(big, build_suffix_array(big));
        one_mappability_large_m(big, 1024, lce);
    }
    double t_large = std::chrono::duration<double>(clock_type::now() - t0).count();
    double ratio = t_nlogn / t_half;

    std::ostringstream os;
    os << "nlogn(5e5,m=64)=" << t_nlogn << "s large-m(5e5,m=1024)=" << t_large << "s doubling x" << ratio;
    note = os.str();
    return t_nlogn < 60.0 && t_large < 60.0 && ratio < 3.0;
}

// --- criterion 7: structural invariants --------------------------------------

bool criterion7(std::string& note) {
    std::mt19937 rng(1007);
    for (Symbol sigma : {2, 4, 26}) {
        for (Pos n : {50, 200, 1000}) {
            for (int tc = 0; tc < 12; ++tc) {
                Text t = random_text(rng, n, sigma);
                LceIndex lce(t, build_suffix_array(t));
                for (Pos m : m_values(n)) {
                    TrimmedSuffixTree tree(t, m, lce.fwd_sa(), lce.fwd_lcp_array());
                    HeavyPathDecomposition hpd(tree);
                    Pos bound =
                        static_cast<Pos>(std::floor(std::log2(std::max<Pos>(tree.leaf_count(), 1)))) + 1;
                    for (TrimmedSuffixTree::NodeId v = 0; v < tree.node_count(); ++v) {
                        if (tree.is_leaf(v) && hpd.light_edges_above(v) > bound) {
                            note = "light-edge bound violated";
                            return false;
                        }
                    }
                    NlognStats stats;
                    one_mappability_nlogn(t, m, lce, &stats);
                    for (Count se : stats.sort_batch_sizes)
                        if (se > 2 * static_cast<Count>(n)) {
                            note = "sort batch above 2n";
                            return false;
                        }
                    for (Count se : stats.partition_batch_sizes)
                        if (se > 2 * static_cast<Count>(n)) {
                            note = "partition batch above 2n";
                            return false;
                        }
                }
            }
        }
    }
    return true;
}

// --- criterion 8: CLI contract -----------------------------------------------

int run_cli(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return (status >> 8) & 0xff;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

bool criterion8(const std::string& cli, std::string& note) {
    std::string dir = "/tmp/onemap_acceptance_" + std::to_string(::getpid());
    if (run_cli("mkdir -p " + dir) != 0) {
        note = "cannot create temp dir";
        return false;
    }
    auto write_file = [&](const std::string& name, const std::string& content) {
        std::ofstream out(dir + "/" + name, std::ios::binary);
        out << content;
    };
    write_file("abab.txt", "abab\n");
    write_file("banana.txt", "banana\n");

    int rc = run_cli(cli + " " + dir + "/abab.txt --m 2 --algorithm nlogn > " + dir + "/abab.out");
    if (rc != 0) {
        note = "abab run failed rc=" + std::to_string(rc);
        return false;
    }
    if (slurp(dir + "/abab.out") !=
        "# m=2 algorithm=nlogn include_self=true\n1\t2\n2\t1\n3\t2\n") {
        note = "abab golden output differs";
        return false;
    }

    rc = run_cli(cli + " " + dir + "/abab.txt --m 2 --algorithm nlogn --no-self > " + dir + "/abab2.out");
    if (rc != 0 || slurp(dir + "/abab2.out") !=
                       "# m=2 algorithm=nlogn include_self=false\n1\t1\n2\t0\n3\t1\n") {
        note = "abab --no-self golden output differs";
        return false;
    }

    rc = run_cli(cli + " " + dir + "/banana.txt --m 3 --algorithm nlogn > " + dir + "/banana.out");
    if (rc != 0 || slurp(dir + "/banana.out") !=
                       "# m=3 algorithm=nlogn include_self=true\n1\t2\n2\t2\n3\t2\n4\t2\n") {
        note = "banana golden output differs";
        return false;
    }

    // byte-identical rows across algorithm choices
    run_cli(cli + " " + dir + "/banana.txt --m 3 --algorithm naive | tail -n +2 > " + dir + "/naive.rows");
    run_cli(cli + " " + dir + "/banana.txt --m 3 --algorithm nlogn | tail -n +2 > " + dir + "/nlogn.rows");
    if (slurp(dir + "/naive.rows") != slurp(dir + "/nlogn.rows")) {
        note = "rows differ across algorithms";
        return false;
    }

    write_file("two.fa", ">r1\nabab\n>r2\nbanana\n");
    rc = run_cli(cli + " " + dir + "/two.fa --m 2 --format fasta > " + dir + "/two.out");
    std::string two = slurp(dir + "/two.out");
    if (rc != 0 || two.find("# record=r1\n") == std::string::npos ||
        two.find("# record=r2\n") == std::string::npos) {
        note = "fasta record blocks missing";
        return false;
    }

    // --verify exits 0 across the small-input suite
    std::mt19937 rng(1008);
    const char* alphabet = "acgtxyzw";
    for (int tc = 0; tc < 12; ++tc) {
        Pos n = 20 + static_cast<Pos>(rng() % 481);
        std::string s;
        for (Pos k = 0; k < n; ++k) s.push_back(alphabet[rng() % (tc % 2 ? 2 : 4)]);
        write_file("v.txt", s + "\n");
        Pos m = std::min<Pos>(n, 1 + static_cast<Pos>(rng() % 40));
        std::string algo = m >= 8 && tc % 3 == 0 ? "large-m" : (tc % 3 == 1 ? "nlogn" : "auto");
        rc = run_cli(cli + " " + dir + "/v.txt --m " + std::to_string(m) + " --algorithm " + algo +
                     " --verify > /dev/null");
        if (rc != 0) {
            note = "--verify exited " + std::to_string(rc) + " for n=" + std::to_string(n) +
                   " m=" + std::to_string(m) + " algo=" + algo;
            return false;
        }
    }

    rc = run_cli(cli + " " + dir + "/missing.txt --m 2 > /dev/null 2>&1");
    if (rc != 2) {
        note = "unreadable input should exit 2, got " + std::to_string(rc);
        return false;
    }
    rc = run_cli(cli + " " + dir + "/abab.txt --m 9 > /dev/null 2>&1");
    if (rc != 3) {
        note = "bad window length should exit 3, got " + std::to_string(rc);
        return false;
    }
    run_cli("rm -rf " + dir);
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = "./tools/onemap";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    std::string note;

    note.clear();
    report(1, "nlogn oracle equivalence", criterion1(note), note);
    note.clear();
    report(2, "large-m oracle equivalence incl. adversarial inputs", criterion2(note), note);
    note.clear();
    report(3, "stairs counters differential + worked example", criterion3(note), note);
    note.clear();
    report(4, "periodic occurrences representation", criterion4(note), note);
    note.clear();
    report(5, "repetitive LCE expansion", criterion5(note), note);
    note.clear();
    report(6, "complexity smoke", criterion6(note), note);
    note.clear();
    report(7, "heavy-path and batching invariants", criterion7(note), note);
    note.clear();
    report(8, "CLI contract", criterion8(cli, note), note);

    return failures == 0 ? 0 : 1;
}
