#include "gridplans/bounds.hpp"
#include "gridplans/cache.hpp"
#include "gridplans/constants.hpp"
#include "gridplans/enumerate.hpp"
#include "gridplans/errors.hpp"
#include "gridplans/perturb.hpp"
#include "gridplans/rng.hpp"
#include "gridplans/sampler.hpp"
#include "gridplans/trees.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace fs = std::filesystem;
using namespace gridplans;

namespace {

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw MalformedInput("cannot write file: " + path.string());
    out << text;
}

void write_partition_file(const fs::path& path, const Partition& p, const std::string& comment) {
    std::string text;
    if (!comment.empty()) text += "# " + comment + "\n";
    text += serialize_partition(p);
    write_text(path, text);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct GlobalFlags {
    int threads = 0;
    std::string cache_dir;
    double budget_seconds = 0.0;
    std::uint64_t budget_mem_mb = 0;
    std::uint64_t seed = 0;

    int worker_count() const {
        if (threads > 0) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }

    Budget budget() const {
        Budget b;
        if (budget_seconds > 0.0) b.seconds = budget_seconds;
        if (budget_mem_mb > 0) b.mem_mb = budget_mem_mb;
        return b;
    }
};

int run_count(const GlobalFlags& g, int n, bool histogram) {
    CountOptions options;
    options.budget = g.budget();
    options.threads = g.worker_count();

    std::string decimal;
    if (!g.cache_dir.empty()) {
        const ResultCache cache(g.cache_dir);
        const nlohmann::json params = {{"n", n}};
        if (const auto hit = cache.lookup("count", params)) {
            decimal = (*hit)["count"].get<std::string>();
        } else {
            const auto t0 = std::chrono::steady_clock::now();
            decimal = to_decimal(count_plans(n, options));
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            cache.store("count", params, {{"count", decimal}}, ms);
        }
    } else {
        decimal = to_decimal(count_plans(n, options));
    }
    std::cout << decimal << '\n';
    if (histogram) std::cout << cut_histogram(n, options.budget).to_csv();
    return 0;
}

int run_enumerate(const GlobalFlags& g, int n, const std::string& out_dir, std::uint64_t limit) {
    std::optional<fs::path> dir;
    if (!out_dir.empty()) {
        dir = fs::path(out_dir);
        fs::create_directories(*dir);
    }
    std::uint64_t emitted = 0;
    const auto result = enumerate_plans(
        n,
        [&](const Partition& p) {
            ++emitted;
            if (dir) {
                char name[32];
                std::snprintf(name, sizeof name, "plan_%08llu.txt",
                              static_cast<unsigned long long>(emitted));
                write_partition_file(*dir / name, p, "");
            }
            return limit == 0 || emitted < limit;
        },
        g.budget());
    std::cout << to_decimal(result.visited) << '\n';
    return 0;
}

int run_cutstats(const GlobalFlags& g, int n, const std::optional<double>& eps) {
    const CutHistogram h = cut_histogram(n, g.budget());
    if (eps) {
        std::cout << "eps,compact_count\n"
                  << format_double(*eps) << ',' << to_decimal(count_compact_plans(h, *eps)) << '\n';
    } else {
        std::cout << h.to_csv();
    }
    return 0;
}

int run_tau(int n_max) {
    std::cout << "n,tau,log_tau_over_n2\n";
    for (int n = 1; n <= n_max; ++n) {
        const BigCount tau = spanning_tree_count(n);
        std::cout << n << ',' << to_decimal(tau) << ','
                  << format_double(natural_log(tau) / (static_cast<double>(n) * n)) << '\n';
    }
    return 0;
}

int run_constants(int digits) {
    const GrowthConstants gc = growth_constants(digits);
    BigFloat ln_b = log(gc.b);
    std::cout << "name,value\n";
    std::cout << "catalan," << gc.catalan.to_significant(digits) << '\n';
    std::cout << "b," << gc.b.to_significant(digits) << '\n';
    std::cout << "log_b," << ln_b.to_significant(digits) << '\n';
    return 0;
}

int run_bounds(const GlobalFlags& g, int n_max, const std::string& known_path) {
    std::map<int, BigCount> known;
    if (!known_path.empty()) known = load_known_counts(known_path);
    CountOptions options;
    options.budget = g.budget();
    options.threads = g.worker_count();

    std::vector<BoundsReport> reports;
    reports.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        std::optional<BigCount> exact;
        if (const auto it = known.find(n); it != known.end()) exact = it->second;
        else if (n <= 6) exact = count_plans(n, options);
        reports.push_back(bounds_report(n, exact));
    }
    std::cout << bounds_csv(reports);
    return 0;
}

int run_sample(const GlobalFlags& g, int n, std::uint64_t count, bool exact_uniform,
               const std::string& out_dir, std::uint64_t max_attempts) {
    std::optional<fs::path> dir;
    if (!out_dir.empty()) {
        dir = fs::path(out_dir);
        fs::create_directories(*dir);
    }
    std::uint64_t written = 0;
    auto emit = [&](std::uint64_t attempt, const Partition& p) {
        if (!dir) return;
        char name[32];
        std::snprintf(name, sizeof name, "sample_%06llu.txt",
                      static_cast<unsigned long long>(++written));
        write_partition_file(*dir / name,
                             p, "seed=" + std::to_string(g.seed) +
                                    " attempt=" + std::to_string(attempt));
    };

    SampleStats stats;
    if (exact_uniform) {
        stats.n = n;
        stats.seed = g.seed;
        for (std::uint64_t i = 0; i < count; ++i) {
            const Partition p = sample_uniform_exact(n, substream_seed(g.seed, i));
            ++stats.attempts;
            ++stats.accepted;
            stats.cut_scores.push_back(cut_score(p));
            emit(i, p);
        }
    } else {
        BatchOptions options;
        options.max_attempts = max_attempts;
        options.threads = g.worker_count();
        options.budget = g.budget();
        options.on_accept = emit;
        stats = sample_batch(n, g.seed, count, options);
    }
    std::cout << stats.to_csv();
    return stats.complete || exact_uniform ? 0 : 3;
}

int run_perturb(const GlobalFlags& g, int n, bool enumerate_all, std::uint64_t sample_count,
                const std::string& out_dir) {
    std::optional<fs::path> dir;
    if (!out_dir.empty()) {
        dir = fs::path(out_dir);
        fs::create_directories(*dir);
    }
    std::string manifest = "choice,file\n";
    std::uint64_t written = 0;
    auto emit = [&](const PerturbChoice& choice, const Partition& p) {
        if (dir) {
            char name[32];
            std::snprintf(name, sizeof name, "member_%06llu.txt",
                          static_cast<unsigned long long>(++written));
            write_partition_file(*dir / name, p, "choice=" + choice.ternary());
            manifest += choice.ternary() + "," + name + "\n";
        } else {
            std::cout << "# choice=" << choice.ternary() << '\n'
                      << serialize_partition(p) << '\n';
        }
    };

    if (enumerate_all) {
        const BigCount total = enumerate_family_choices(
            n,
            [&](const PerturbChoice& choice, const Partition& p) {
                emit(choice, p);
                return true;
            },
            g.budget());
        if (dir) {
            write_text(*dir / "manifest.csv", manifest);
            std::cout << to_decimal(total) << '\n';
        }
    } else {
        for (std::uint64_t i = 0; i < sample_count; ++i) {
            const PerturbChoice choice = sample_family_choice(n, substream_seed(g.seed, i));
            emit(choice, apply_perturbation(choice));
        }
        if (dir) write_text(*dir / "manifest.csv", manifest);
    }
    return 0;
}

int run_validate(const std::vector<std::string>& files) {
    bool all_valid = true;
    for (const auto& file : files) {
        std::ifstream in(file);
        if (!in) throw MalformedInput("cannot open file: " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const Partition p = parse_partition(text);
        const ValidationReport report = validate_partition(build_grid_graph(p.side()), p);
        if (report.valid()) {
            std::cout << "OK " << file << " cut=" << cut_score(p) << '\n';
        } else {
            all_valid = false;
            std::cout << "FAIL " << file;
            if (report.offending_district) {
                std::cout << " district=" << *report.offending_district;
                if (!report.balanced)
                    std::cout << " size=" << report.district_sizes[*report.offending_district];
                else
                    std::cout << " disconnected";
            }
            std::cout << '\n';
        }
    }
    return all_valid ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equal-size connected partitions of the n×n grid: exact counts, "
                 "enumeration, spanning trees, bounds, perturbation family, sampling"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    GlobalFlags g;
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)")
        ->envname("GRIDPLANS_THREADS");
    app.add_option("--cache-dir", g.cache_dir, "directory for cached results")
        ->envname("GRIDPLANS_CACHE_DIR");
    app.add_option("--budget-seconds", g.budget_seconds, "wall-clock budget, 0 = unlimited")
        ->envname("GRIDPLANS_BUDGET_SECONDS");
    app.add_option("--budget-mem-mb", g.budget_mem_mb, "memory budget in MiB, 0 = unlimited")
        ->envname("GRIDPLANS_BUDGET_MEM_MB");
    app.add_option("--seed", g.seed, "random seed")->envname("GRIDPLANS_SEED");

    int n = 0;
    bool histogram = false;
    std::string out_dir;
    std::uint64_t limit = 0;
    std::optional<double> eps;
    int n_max = 1;
    int digits = 15;
    std::string known_path;
    std::uint64_t count = 1;
    bool exact_uniform = false;
    std::uint64_t max_attempts = 10'000'000;
    bool enumerate_all = false;
    std::uint64_t sample_count = 0;
    std::vector<std::string> files;

    auto* cmd_count = app.add_subcommand("count", "exact number of plans |P_n|");
    cmd_count->add_option("--n", n, "grid side")->required();
    cmd_count->add_flag("--histogram", histogram, "also print the cut-score histogram CSV");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "visit every plan");
    cmd_enumerate->add_option("--n", n, "grid side")->required();
    cmd_enumerate->add_option("--out-dir", out_dir, "write one file per plan");
    cmd_enumerate->add_option("--limit", limit, "stop after this many plans (0 = all)");

    auto* cmd_cutstats = app.add_subcommand("cutstats", "exact cut-score histogram");
    cmd_cutstats->add_option("--n", n, "grid side")->required();
    cmd_cutstats->add_option("--eps", eps, "print |C_n(eps)| instead of the histogram");

    auto* cmd_tau = app.add_subcommand("tau", "spanning tree counts");
    cmd_tau->add_option("--n-max", n_max, "largest grid side")->required();

    auto* cmd_constants = app.add_subcommand("constants", "Catalan constant and growth constant");
    cmd_constants->add_option("--digits", digits, "significant digits (<= 50)");

    auto* cmd_bounds = app.add_subcommand("bounds", "lower/exact/upper bound table");
    cmd_bounds->add_option("--n-max", n_max, "largest grid side")->required();
    cmd_bounds->add_option("--known-counts", known_path, "CSV of known counts for large n");

    auto* cmd_sample = app.add_subcommand("sample", "random plans (tree-cut or exact uniform)");
    cmd_sample->add_option("--n", n, "grid side")->required();
    cmd_sample->add_option("--count", count, "accepted samples to produce");
    cmd_sample->add_flag("--exact-uniform", exact_uniform, "uniform over all plans (n <= 5)");
    cmd_sample->add_option("--out-dir", out_dir, "write accepted partitions here");
    cmd_sample->add_option("--max-attempts", max_attempts, "attempt cap for rejection sampling");

    auto* cmd_perturb = app.add_subcommand("perturb", "the lower-bound perturbation family");
    cmd_perturb->add_option("--n", n, "grid side (multiple of 6)")->required();
    cmd_perturb->add_flag("--enumerate", enumerate_all, "walk the whole family");
    cmd_perturb->add_option("--sample", sample_count, "sample this many family members");
    cmd_perturb->add_option("--out-dir", out_dir, "write members and manifest.csv here");

    auto* cmd_validate = app.add_subcommand("validate", "check partition files");
    cmd_validate->add_option("files", files, "partition files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_count->parsed()) return run_count(g, n, histogram);
        if (cmd_enumerate->parsed()) return run_enumerate(g, n, out_dir, limit);
        if (cmd_cutstats->parsed()) return run_cutstats(g, n, eps);
        if (cmd_tau->parsed()) return run_tau(n_max);
        if (cmd_constants->parsed()) return run_constants(digits);
        if (cmd_bounds->parsed()) return run_bounds(g, n_max, known_path);
        if (cmd_sample->parsed())
            return run_sample(g, n, count, exact_uniform, out_dir, max_attempts);
        if (cmd_perturb->parsed()) {
            if (enumerate_all == (sample_count > 0))
                throw MalformedInput("perturb needs exactly one of --enumerate or --sample K");
            return run_perturb(g, n, enumerate_all, sample_count, out_dir);
        }
        if (cmd_validate->parsed()) return run_validate(files);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedResidue& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
