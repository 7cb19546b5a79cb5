#pragma once

#include "gridplans/budget.hpp"
#include "gridplans/grid.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gridplans {

// One tree-cut draw: a uniform spanning tree with a uniform (n−1)-subset of
// its edges removed. Accepted (returned) only when all n components have
// exactly n cells; rejection is the common outcome and returns nullopt.
std::optional<Partition> tree_cut_sample(int n, std::uint64_t seed);

struct SampleStats {
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t attempts = 0;
    std::uint64_t accepted = 0;
    std::vector<int> cut_scores; // one per acceptance, in attempt order
    bool complete = true;        // false when the attempt cap struck first

    double mean_cut() const;
    std::string to_csv() const; // "attempts,accepted,mean_cut,min_cut,max_cut"
};

struct BatchOptions {
    std::uint64_t max_attempts = 10'000'000;
    int threads = 1;
    Budget budget;
    // Invoked in attempt order for each acceptance that enters the stats.
    std::function<void(std::uint64_t attempt, const Partition&)> on_accept;
};

// Repeats tree_cut_sample until `target_accepted` acceptances (or the attempt
// cap). Attempt i always uses the substream derived from (seed, i), so the
// stats are independent of thread count.
SampleStats sample_batch(int n, std::uint64_t seed, std::uint64_t target_accepted,
                         const BatchOptions& options = {});

// Exactly uniform over all plans: draws a uniform index below |𝒫ₙ| and walks
// the enumeration to that position. Needs the full enumeration, hence n ≤ 5.
Partition sample_uniform_exact(int n, std::uint64_t seed);

} // namespace gridplans
