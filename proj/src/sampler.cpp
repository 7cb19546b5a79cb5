#include "gridplans/sampler.hpp"

#include "gridplans/enumerate.hpp"
#include "gridplans/errors.hpp"
#include "gridplans/rng.hpp"
#include "gridplans/trees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace gridplans {

std::optional<Partition> tree_cut_sample(int n, std::uint64_t seed) {
    if (n < 2) throw MalformedInput("tree-cut sampling requires n >= 2");
    Rng rng(seed);
    const GridGraph g(n);
    const SpanningTree tree = random_spanning_tree(g, rng);

    // Tree edge i joins cell i+1 to its parent (cell 0 is the root). Sever a
    // uniform (n−1)-subset via a partial shuffle.
    const int cells = n * n;
    std::vector<int> index(cells - 1);
    std::iota(index.begin(), index.end(), 0);
    std::vector<char> severed(cells, 0);
    for (int i = 0; i < n - 1; ++i) {
        const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cells - 1 - i)));
        std::swap(index[i], index[j]);
        severed[index[i] + 1] = 1;
    }

    // Component of a cell = climb parents until a severed link or the root.
    std::vector<int> rep(cells, -1);
    std::vector<int> path;
    for (int start = 0; start < cells; ++start) {
        if (rep[start] >= 0) continue;
        int u = start;
        path.clear();
        while (rep[u] < 0 && !severed[u] && tree.parent[u] >= 0) {
            path.push_back(u);
            u = tree.parent[u];
        }
        const int r = rep[u] >= 0 ? rep[u] : u;
        rep[u] = r;
        for (int v : path) rep[v] = r;
    }

    // n−1 cuts split the tree into exactly n pieces; accept iff all have n cells.
    std::vector<int> size(cells, 0);
    for (int v = 0; v < cells; ++v) ++size[rep[v]];
    for (int v = 0; v < cells; ++v)
        if (size[rep[v]] != n) return std::nullopt;

    std::vector<std::uint8_t> labels(cells);
    std::vector<int> relabel(cells, -1);
    int next = 0;
    for (int v = 0; v < cells; ++v) {
        int& m = relabel[rep[v]];
        if (m < 0) m = next++;
        labels[v] = static_cast<std::uint8_t>(m);
    }
    return Partition(n, std::move(labels));
}

double SampleStats::mean_cut() const {
    if (cut_scores.empty()) return 0.0;
    return std::accumulate(cut_scores.begin(), cut_scores.end(), 0.0) /
           static_cast<double>(cut_scores.size());
}

std::string SampleStats::to_csv() const {
    std::ostringstream out;
    out.precision(10);
    out << "attempts,accepted,mean_cut,min_cut,max_cut\n";
    out << attempts << ',' << accepted << ',';
    if (!cut_scores.empty()) {
        const auto [lo, hi] = std::minmax_element(cut_scores.begin(), cut_scores.end());
        out << mean_cut() << ',' << *lo << ',' << *hi;
    } else {
        out << ",,";
    }
    out << '\n';
    return out.str();
}

SampleStats sample_batch(int n, std::uint64_t seed, std::uint64_t target_accepted,
                         const BatchOptions& options) {
    if (target_accepted < 1) throw MalformedInput("target_accepted must be >= 1");
    const BudgetGuard guard(options.budget);

    SampleStats stats;
    stats.n = n;
    stats.seed = seed;

    auto attempt_cut = [&](std::uint64_t i) -> std::optional<int> {
        const auto p = tree_cut_sample(n, substream_seed(seed, i));
        if (!p) return std::nullopt;
        return cut_score(*p);
    };

    const int workers = std::max(1, options.threads);
    if (workers == 1) {
        while (stats.accepted < target_accepted && stats.attempts < options.max_attempts) {
            if ((stats.attempts & 0x3FF) == 0) guard.check();
            const std::uint64_t i = stats.attempts++;
            const auto p = tree_cut_sample(n, substream_seed(seed, i));
            if (p) {
                ++stats.accepted;
                stats.cut_scores.push_back(cut_score(*p));
                if (options.on_accept) options.on_accept(i, *p);
            }
        }
        stats.complete = stats.accepted >= target_accepted;
        return stats;
    }

    // Attempt i is always drawn from substream (seed, i); workers precompute a
    // block of attempts, then a serial scan in index order consumes them until
    // the target, so the result is identical for any worker count.
    const std::uint64_t block = static_cast<std::uint64_t>(workers) * 64;
    std::uint64_t base = 0;
    std::vector<std::optional<int>> cuts(block);
    while (stats.accepted < target_accepted && base < options.max_attempts) {
        guard.check();
        const std::uint64_t m = std::min(block, options.max_attempts - base);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < m; i += static_cast<std::uint64_t>(workers))
                    cuts[i] = attempt_cut(base + i);
            });
        for (auto& th : pool) th.join();
        for (std::uint64_t i = 0; i < m && stats.accepted < target_accepted; ++i) {
            ++stats.attempts;
            if (cuts[i]) {
                ++stats.accepted;
                stats.cut_scores.push_back(*cuts[i]);
                if (options.on_accept) // accepted draws are rare; redraw for the partition
                    options.on_accept(base + i, *tree_cut_sample(n, substream_seed(seed, base + i)));
            }
        }
        base += m;
    }
    stats.complete = stats.accepted >= target_accepted;
    return stats;
}

Partition sample_uniform_exact(int n, std::uint64_t seed) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    if (n > 5)
        throw BudgetExceeded("exact uniform sampling walks the full enumeration; supported for n <= 5");
    // Unranking order: lexicographic by the serialized canonical labeling.
    std::vector<std::string> plans;
    enumerate_plans(n, [&](const Partition& p) {
        plans.push_back(serialize_partition(p));
        return true;
    });
    std::sort(plans.begin(), plans.end());
    Rng rng(seed);
    const std::uint64_t k = rng.bounded(plans.size());
    return parse_partition(plans[k]);
}

} // namespace gridplans
