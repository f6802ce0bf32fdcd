#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "onemap/errors.hpp"
#include "onemap/io.hpp"
#include "onemap/lce.hpp"
#include "onemap/mappability.hpp"
#include "onemap/mappability_large_m.hpp"
#include "onemap/mappability_nlogn.hpp"
#include "onemap/oracle.hpp"
#include "onemap/suffix_array.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace onemap;

constexpr Pos kNaiveLimit = 5000;

struct RunConfig {
    std::string input = "-";
    Pos m = 0;
    std::string algorithm = "auto";
    std::string format = "auto";
    std::string mode = "le1";
    bool no_self = false;
    std::string output = "tsv";
    bool verify = false;
    bool bench = false;
    bool parallel_records = false;
};

Algorithm parse_algorithm(const std::string& s) {
    if (s == "nlogn") return Algorithm::NlogN;
    if (s == "large-m") return Algorithm::LargeM;
    if (s == "naive") return Algorithm::Naive;
    return Algorithm::Auto;
}

struct Timings {
    double index_s = 0, algo_s = 0;
    Count batches = 0;
};

MappabilityVector compute(const Text& text, Pos m, Algorithm algo, Timings* tm) {
    using clock = std::chrono::steady_clock;
    if (algo == Algorithm::Naive) {
        auto t0 = clock::now();
        MappabilityVector v = oracle::naive_mappability(text, m, 1, kNaiveLimit);
        if (tm) tm->algo_s = std::chrono::duration<double>(clock::now() - t0).count();
        return v;
    }
    auto t0 = clock::now();
    LceIndex lce(text, build_suffix_array(text));
    auto t1 = clock::now();
    MappabilityVector v;
    Count batches = 0;
    if (algo == Algorithm::LargeM) {
        LargeMStats stats;
        v = one_mappability_large_m(text, m, lce, &stats);
        batches = stats.batches;
    } else {
        NlognStats stats;
        v = one_mappability_nlogn(text, m, lce, &stats);
        batches = static_cast<Count>(stats.sort_batch_sizes.size() + stats.partition_batch_sizes.size());
    }
    auto t2 = clock::now();
    if (tm) {
        tm->index_s = std::chrono::duration<double>(t1 - t0).count();
        tm->algo_s = std::chrono::duration<double>(t2 - t1).count();
        tm->batches = batches;
    }
    return v;
}

int emit_record(const Text& text, const RunConfig& cfg, Algorithm algo, std::ostream& os) {
    const char sep = cfg.output == "csv" ? ',' : '\t';
    MappabilityVector v = compute(text, cfg.m, algo, nullptr);

    if (cfg.verify) {
        if (text.n <= kNaiveLimit) {
            MappabilityVector ref = oracle::naive_mappability(text, cfg.m, 1, kNaiveLimit);
            for (Pos i = 0; i < v.windows(); ++i) {
                if (v.exact[i] != ref.exact[i] || v.one_mismatch[i] != ref.one_mismatch[i]) {
                    std::cerr << "verification mismatch at position " << (i + 1) << ": got ("
                              << v.exact[i] << "," << v.one_mismatch[i] << ") expected ("
                              << ref.exact[i] << "," << ref.one_mismatch[i] << ")\n";
                    return 4;
                }
            }
        } else {
            std::cerr << "# verify skipped: n=" << text.n << " exceeds oracle limit " << kNaiveLimit
                      << "\n";
        }
    }

    if (!text.record_id.empty()) os << "# record=" << text.record_id << "\n";
    const Count self = cfg.no_self ? 1 : 0;
    for (Pos i = 0; i < v.windows(); ++i) {
        os << (i + 1);
        if (cfg.mode == "exact" || cfg.mode == "all-three") os << sep << (v.exact[i] - self);
        if (cfg.mode == "one-mismatch" || cfg.mode == "all-three") os << sep << v.one_mismatch[i];
        if (cfg.mode == "le1" || cfg.mode == "all-three") os << sep << (v.total_le1[i] - self);
        os << "\n";
    }
    return 0;
}

int run(const RunConfig& cfg) {
    std::vector<Text> texts;
    InputFormat fmt = cfg.format == "plain"   ? InputFormat::Plain
                      : cfg.format == "fasta" ? InputFormat::Fasta
                                              : InputFormat::Auto;
    if (cfg.input == "-") {
        texts = load_texts(std::cin, fmt);
    } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) {
            std::cerr << "cannot read input: " << cfg.input << "\n";
            return 2;
        }
        texts = load_texts(in, fmt);
    }

    Algorithm requested = parse_algorithm(cfg.algorithm);
    for (const Text& t : texts) {
        if (cfg.m < 1 || cfg.m > t.n) {
            std::cerr << "window length m=" << cfg.m << " out of range for n=" << t.n << "\n";
            return 3;
        }
        if (requested == Algorithm::LargeM && cfg.m < 8) {
            std::cerr << "large-m requires m >= 8\n";
            return 3;
        }
    }

    if (cfg.bench) {
        for (const Text& t : texts) {
            Algorithm algo = resolve_algorithm(requested, t.n, cfg.m);
            Timings tm;
            auto t0 = std::chrono::steady_clock::now();
            compute(t, cfg.m, algo, &tm);
            double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            int threads = 1;
#ifdef _OPENMP
            threads = omp_get_max_threads();
#endif
            std::cout << "# phase index_build: " << tm.index_s << "s\n"
                      << "# phase algorithm: " << tm.algo_s << "s\n"
                      << "# phase total: " << total << "s\n";
            std::cout << "BENCH algorithm=" << algorithm_name(algo) << " n=" << t.n << " m=" << cfg.m
                      << " index_s=" << tm.index_s << " algo_s=" << tm.algo_s << " total_s=" << total
                      << " batches=" << tm.batches << " threads=" << threads << "\n";
        }
        return 0;
    }

    // resolve on the single text when possible so the header names the
    // algorithm actually run
    Algorithm header_algo = requested;
    if (requested == Algorithm::Auto && texts.size() == 1)
        header_algo = resolve_algorithm(requested, texts[0].n, cfg.m);
    std::ostringstream body;
    body << "# m=" << cfg.m << " algorithm=" << algorithm_name(header_algo)
         << " include_self=" << (cfg.no_self ? "false" : "true") << "\n";

    std::vector<int> codes(texts.size(), 0);
    std::vector<std::string> errors(texts.size());
    std::vector<std::ostringstream> blocks(texts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel_records && texts.size() > 1)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(texts.size()); ++k) {
        // exceptions may not cross the parallel region
        try {
            Algorithm algo = resolve_algorithm(requested, texts[static_cast<size_t>(k)].n, cfg.m);
            codes[static_cast<size_t>(k)] =
                emit_record(texts[static_cast<size_t>(k)], cfg, algo, blocks[static_cast<size_t>(k)]);
        } catch (const Error& e) {
            codes[static_cast<size_t>(k)] = e.code() == Errc::BadWindowLength ? 3 : 1;
            errors[static_cast<size_t>(k)] = e.what();
        } catch (const std::exception& e) {
            codes[static_cast<size_t>(k)] = 1;
            errors[static_cast<size_t>(k)] = e.what();
        }
    }
    for (size_t k = 0; k < texts.size(); ++k) {
        if (codes[k] != 0) {
            if (!errors[k].empty()) std::cerr << "error: " << errors[k] << "\n";
            return codes[k];
        }
    }
    std::cout << body.str();
    for (auto& b : blocks) std::cout << b.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"per-position 1-mappability counts under Hamming distance"};
    RunConfig cfg;
    app.add_option("input", cfg.input, "input path, or - for standard input");
    app.add_option("--m", cfg.m, "window length")->required();
    app.add_option("--algorithm", cfg.algorithm, "auto|nlogn|large-m|naive")
        ->check(CLI::IsMember({"auto", "nlogn", "large-m", "naive"}));
    app.add_option("--format", cfg.format, "plain|fasta|auto")
        ->check(CLI::IsMember({"plain", "fasta", "auto"}));
    app.add_option("--mode", cfg.mode, "le1|exact|one-mismatch|all-three")
        ->check(CLI::IsMember({"le1", "exact", "one-mismatch", "all-three"}));
    app.add_flag("--no-self", cfg.no_self, "exclude the window's own exact occurrence");
    app.add_option("--output", cfg.output, "tsv|csv")->check(CLI::IsMember({"tsv", "csv"}));
    app.add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");
    app.add_flag("--bench", cfg.bench, "print per-phase timings instead of counts");
    app.add_flag("--parallel-records", cfg.parallel_records, "process FASTA records concurrently");
    CLI11_PARSE(app, argc, argv);

    try {
        return run(cfg);
    } catch (const onemap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == onemap::Errc::BadWindowLength ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
