#include "gridplans/bounds.hpp"
#include "gridplans/enumerate.hpp"
#include "gridplans/errors.hpp"
#include "gridplans/trees.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gridplans;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 1) == 4);
    CHECK(binomial(12, 2) == 66);
    CHECK(binomial(24, 3) == 2024);
    CHECK(binomial(24, 4) == 10626);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("tree-times-subsets upper bound") {
    CHECK(upper_bound_exact(1) == 1);
    CHECK(upper_bound_exact(2) == 16);    // 4 * C(4,1)
    CHECK(upper_bound_exact(3) == 12672); // 192 * C(12,2)
    CHECK(upper_bound_exact(2) >= count_plans(2));
    CHECK(upper_bound_exact(3) >= count_plans(3));
}

TEST_CASE("edge-subset trivial upper bound") {
    CHECK(trivial_upper_bound(2) == 16);
    CHECK(trivial_upper_bound(3) == 4096);
    CHECK(trivial_upper_bound(3) >= count_plans(3));
    CHECK(upper_bound_exact(2) == trivial_upper_bound(2)); // both 16 at n=2
}

TEST_CASE("perturbation-family lower bound") {
    CHECK(lower_bound_exact(6) == 27);
    CHECK(to_decimal(lower_bound_exact(12)) == "387420489"); // 3^18
    CHECK_THROWS_AS(lower_bound_exact(3), UnsupportedResidue);
    CHECK_THROWS_AS(lower_bound_exact(7), UnsupportedResidue);
    CHECK_THROWS_AS(lower_bound_exact(8), UnsupportedResidue);
    CHECK_THROWS_AS(lower_bound_exact(0), UnsupportedResidue);
}

TEST_CASE("compact-count upper bound") {
    CHECK(compact_count_upper(4, 0.036) == 0); // floor(0.576) < 3: empty sum
    CHECK(compact_count_upper(4, 0.25) == 12650);
    CHECK(compact_count_upper(2, 0.5) == 10); // C(4,1) + C(4,2)

    BigCount prev = 0;
    for (double eps : {0.05, 0.1, 0.25, 0.5, 1.0}) {
        const BigCount cur = compact_count_upper(5, eps);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(compact_count_upper(0, 0.5), MalformedInput);
    CHECK_THROWS_AS(compact_count_upper(4, 0.0), MalformedInput);
}

TEST_CASE("epsilon threshold solves the defining equation") {
    const EpsilonSolution sol = epsilon_threshold();
    CHECK(sol.root > 0.03);
    CHECK(sol.root < 0.04);
    CHECK(sol.residual < 1e-12);
    CHECK(std::abs(std::pow(2.0 * std::exp(1.0) / sol.root, sol.root) - std::pow(3.0, 1.0 / 6.0)) <
          1e-10);
    // Strictly inside the compact regime at half the root.
    const double half = sol.root / 2.0;
    CHECK(std::pow(2.0 * std::exp(1.0) / half, half) < std::pow(3.0, 1.0 / 6.0));
    // Deterministic, and stable against bisection refinement (bracket shrinks
    // to 1e-16, far past this anchor).
    CHECK(epsilon_threshold().root == sol.root);
    CHECK(std::abs(sol.root - 0.036617693213) < 1e-9);
}

TEST_CASE("bounds report assembles the sandwich") {
    const BoundsReport r6 = bounds_report(6, BigCount(451206));
    REQUIRE(r6.lower.has_value());
    REQUIRE(r6.exact.has_value());
    CHECK(*r6.lower == 27);
    CHECK(r6.upper == spanning_tree_count(6) * binomial(60, 5));
    CHECK(*r6.lower <= *r6.exact);
    CHECK(*r6.exact <= r6.upper);
    CHECK(std::abs(*r6.log_exact - std::log(451206.0)) < 1e-9);

    const BoundsReport r5 = bounds_report(5);
    CHECK_FALSE(r5.lower.has_value());
    CHECK_FALSE(r5.exact.has_value());
    CHECK(r5.log_upper > 0.0);
}

TEST_CASE("bounds CSV emits one row per n with empty fields where unknown") {
    std::vector<BoundsReport> reports;
    for (int n = 1; n <= 6; ++n)
        reports.push_back(bounds_report(n, n <= 6 ? std::optional<BigCount>(count_plans(n))
                                                  : std::nullopt));
    const std::string csv = bounds_csv(reports);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,lower,exact,upper,log_lower,log_exact,log_upper");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);
    CHECK(csv.find("6,27,451206,") != std::string::npos);
    CHECK(csv.find("5,,4006,") != std::string::npos); // no lower at n=5
}

TEST_CASE("upper bound log-density stays above the growth constant") {
    // log(upper)/n^2 exceeds ln b = 4C/pi for n >= 4: the bound is never
    // tighter than the true growth rate. The gap comes entirely from the
    // binomial factor, whose own log-density decays monotonically.
    const double ln_b = 1.16624362;
    double prev_bino = 1e9;
    for (int n = 4; n <= 14; ++n) {
        const double nn = static_cast<double>(n) * n;
        CHECK(natural_log(upper_bound_exact(n)) / nn > ln_b);
        const double bino = natural_log(binomial(2 * n * (n - 1), n - 1)) / nn;
        CHECK(bino < prev_bino);
        prev_bino = bino;
    }
    // The total log-density itself is not monotone from n=6 (it crests at
    // n=10, where the shrinking binomial term starts to dominate the rising
    // tau term); past the crest it falls toward ln b.
    double prev_excess = 1e9;
    for (int n = 10; n <= 14; ++n) {
        const double excess =
            natural_log(upper_bound_exact(n)) / (static_cast<double>(n) * n) - ln_b;
        CHECK(excess < prev_excess);
        prev_excess = excess;
    }
}

TEST_CASE("known-count files parse and reject garbage") {
    const auto dir = std::filesystem::temp_directory_path() / "gridplans_known_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "counts.csv";
    {
        std::ofstream out(path);
        out << "# comment\nn,count\n7,158753814\n9,706152947468301\n";
    }
    const auto known = load_known_counts(path);
    CHECK(known.size() == 2);
    CHECK(known.at(7) == 158753814);
    CHECK(to_decimal(known.at(9)) == "706152947468301");

    {
        std::ofstream out(path);
        out << "7 158753814\n";
    }
    CHECK_THROWS_AS(load_known_counts(path), MalformedInput);
    CHECK_THROWS_AS(load_known_counts(dir / "absent.csv"), MalformedInput);
    std::filesystem::remove_all(dir);

    // The shipped data file.
    const auto shipped = load_known_counts(std::filesystem::path(GRIDPLANS_SOURCE_DIR) / "data" /
                                           "known_plan_counts.csv");
    CHECK(shipped.at(1) == 1);
    CHECK(shipped.at(6) == 451206);
    CHECK(to_decimal(shipped.at(9)) == "706152947468301");
}
