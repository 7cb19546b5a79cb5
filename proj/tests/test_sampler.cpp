#include "gridplans/errors.hpp"
#include "gridplans/sampler.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace gridplans;

TEST_CASE("tree-cut draws are deterministic and valid when accepted") {
    CHECK_THROWS_AS(tree_cut_sample(1, 0), MalformedInput);

    for (int n : {2, 3}) {
        const GridGraph g = build_grid_graph(n);
        int accepted = 0;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const auto p = tree_cut_sample(n, seed);
            const auto again = tree_cut_sample(n, seed);
            CHECK(p.has_value() == again.has_value());
            if (p) {
                CHECK(p->labels() == again->labels());
                CHECK(validate_partition(g, *p).valid());
                ++accepted;
            }
        }
        CHECK(accepted > 0);
    }
}

TEST_CASE("2x2 tree-cut acceptances land on both plans") {
    std::set<std::string> seen;
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 600 && accepted < 100; ++seed) {
        if (const auto p = tree_cut_sample(2, seed)) {
            seen.insert(serialize_partition(p->canonicalized()));
            ++accepted;
        }
    }
    CHECK(accepted == 100);
    CHECK(seen.size() == 2);
}

TEST_CASE("batch sampling reaches its target and reports cut scores") {
    const SampleStats stats = sample_batch(2, 42, 100);
    CHECK(stats.n == 2);
    CHECK(stats.seed == 42);
    CHECK(stats.accepted == 100);
    CHECK(stats.cut_scores.size() == 100);
    CHECK(stats.complete);
    CHECK(stats.attempts >= 100);
    for (int c : stats.cut_scores) CHECK(c == 2); // both 2x2 plans cut exactly 2 edges
    CHECK(stats.mean_cut() == 2.0);
    CHECK(stats.to_csv() == "attempts,accepted,mean_cut,min_cut,max_cut\n" +
                                std::to_string(stats.attempts) + ",100,2,2,2\n");
}

TEST_CASE("batch results do not depend on thread count") {
    BatchOptions serial;
    serial.threads = 1;
    BatchOptions threaded;
    threaded.threads = 3;
    const SampleStats a = sample_batch(3, 7, 40, serial);
    const SampleStats b = sample_batch(3, 7, 40, threaded);
    CHECK(a.attempts == b.attempts);
    CHECK(a.accepted == b.accepted);
    CHECK(a.cut_scores == b.cut_scores);
}

TEST_CASE("attempt cap halts an unreachable target") {
    BatchOptions opts;
    opts.max_attempts = 50;
    const SampleStats stats = sample_batch(4, 1, 1'000'000, opts);
    CHECK_FALSE(stats.complete);
    CHECK(stats.attempts == 50);
    CHECK(stats.accepted < 1'000'000);
    CHECK(stats.cut_scores.size() == stats.accepted);
}

TEST_CASE("acceptance callback sees each accepted plan in attempt order") {
    const GridGraph g = build_grid_graph(3);
    std::vector<std::uint64_t> attempts;
    std::vector<int> cuts;
    BatchOptions opts;
    opts.threads = 2;
    opts.on_accept = [&](std::uint64_t attempt, const Partition& p) {
        attempts.push_back(attempt);
        CHECK(validate_partition(g, p).valid());
        cuts.push_back(cut_score(p));
    };
    const SampleStats stats = sample_batch(3, 11, 25, opts);
    CHECK(attempts.size() == stats.accepted);
    for (std::size_t i = 1; i < attempts.size(); ++i) CHECK(attempts[i - 1] < attempts[i]);
    CHECK(cuts == stats.cut_scores);
}

TEST_CASE("exact-uniform draws are valid, deterministic, and size limited") {
    CHECK_THROWS_AS(sample_uniform_exact(6, 0), BudgetExceeded);

    const GridGraph g = build_grid_graph(4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Partition p = sample_uniform_exact(4, seed);
        CHECK(validate_partition(g, p).valid());
        CHECK(sample_uniform_exact(4, seed).labels() == p.labels());
    }

    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 400 && seen.size() < 2; ++seed)
        seen.insert(serialize_partition(sample_uniform_exact(2, seed)));
    CHECK(seen.size() == 2);
}

TEST_CASE("stats CSV leaves cut fields empty with no acceptances") {
    const std::string header = "attempts,accepted,mean_cut,min_cut,max_cut\n";
    SampleStats empty;
    empty.attempts = 9;
    empty.accepted = 0;
    CHECK(empty.to_csv() == header + "9,0,,,\n");

    SampleStats one;
    one.attempts = 4;
    one.accepted = 2;
    one.cut_scores = {10, 12};
    CHECK(one.to_csv() == header + "4,2,11,10,12\n");
}
