#pragma once

#include "gridplans/bigcount.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gridplans {

// Exact binomial coefficient; j > m yields 0.
BigCount binomial(unsigned long m, unsigned long j);

// τ(Gₙ) · C(2n(n−1), n−1): every plan arises from a spanning tree with n−1
// edges removed, and trees times edge-subsets overcounts the plans.
BigCount upper_bound_exact(int n);

// 2^{2n(n−1)}: one bit per grid edge.
BigCount trivial_upper_bound(int n);

// 3^{(n/6)(n−3)}: the size of the border-perturbation family grown from the
// all-vertical tiling. Defined only for n ≡ 0 (mod 6), n ≥ 6.
BigCount lower_bound_exact(int n);

// Σ_{j=n−1}^{⌊εn²⌋} C(2n(n−1), j): an upper bound on the number of plans with
// cut score at most εn². Empty sum (⌊εn²⌋ < n−1) yields 0.
BigCount compact_count_upper(int n, double eps);

// Root of (2e/ε)^ε = 3^{1/6} in (0, 0.5): below it, compact plans form a
// vanishing fraction of the perturbation family alone.
struct EpsilonSolution {
    double root = 0.0;
    double residual = 0.0; // |(2e/root)^root − 3^{1/6}|
};

EpsilonSolution epsilon_threshold();

struct BoundsReport {
    int n = 0;
    std::optional<BigCount> lower; // only for n ≡ 0 (mod 6)
    std::optional<BigCount> exact;
    BigCount upper;
    std::optional<double> log_lower;
    std::optional<double> log_exact;
    double log_upper = 0.0;
};

// Assembles the bound sandwich for one n; the exact count is the caller's to
// supply (computed or looked up), since feasibility depends on context.
BoundsReport bounds_report(int n, const std::optional<BigCount>& exact = std::nullopt);

// CSV rows "n,lower,exact,upper,log_lower,log_exact,log_upper" with empty
// fields where a value is unavailable.
std::string bounds_csv(const std::vector<BoundsReport>& reports);

// Reads a "n,count" CSV of externally known plan counts ('#' lines skipped).
std::map<int, BigCount> load_known_counts(const std::filesystem::path& path);

} // namespace gridplans
