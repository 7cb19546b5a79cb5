#pragma once

#include "gridplans/bigcount.hpp"
#include "gridplans/budget.hpp"
#include "gridplans/grid.hpp"

#include <functional>
#include <map>
#include <string>

namespace gridplans {

struct CountOptions {
    Budget budget;
    int threads = 1;
};

/// Exact number of plans of the n x n grid (partitions into n connected
/// districts of n cells, label-free). Column-sweep profile DP; identical
/// results for any thread count.
BigCount count_plans(int n, const CountOptions& options = {});

/// Visitor gets each plan exactly once, labels in canonical (first-occurrence,
/// row-major) numbering, in a fixed deterministic order. Return false to stop.
using PlanVisitor = std::function<bool(const Partition&)>;

struct EnumerateResult {
    BigCount visited = 0;
    bool completed = false; // false when the visitor aborted
};

/// Depth-first walk of the same sweep-transition tree the counting DP uses,
/// without state merging (each leaf is one plan). Practical through n = 6.
EnumerateResult enumerate_plans(int n, const PlanVisitor& visitor, const Budget& budget = {});

/// Exact plan count per cut score, from exhaustive enumeration.
struct CutHistogram {
    int n = 0;
    std::map<int, BigCount> bins;

    BigCount total() const;
    int min_cut() const; // smallest occupied bin; -1 when empty
    int max_cut() const; // largest occupied bin; -1 when empty
    std::string to_csv() const; // header "cut,count"
};

CutHistogram cut_histogram(int n, const Budget& budget = {});

/// Number of plans with cut score <= eps * n^2.
BigCount count_compact_plans(const CutHistogram& histogram, double eps);
BigCount count_compact_plans(int n, double eps, const Budget& budget = {});

} // namespace gridplans
