#pragma once

#include "gridplans/bigcount.hpp"
#include "gridplans/grid.hpp"
#include "gridplans/rng.hpp"

#include <utility>
#include <vector>

namespace gridplans {

// Rooted spanning tree of the n×n grid; parent[cell] is an adjacent cell,
// -1 at the root. Always has n²−1 edges and connects all cells.
struct SpanningTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;

    // Tree edges as (low cell, high cell) pairs, one per non-root cell.
    std::vector<std::pair<int, int>> edges() const;
};

// Number of spanning trees of the n×n grid, computed exactly as a cofactor of
// the graph Laplacian (any deleted row/column index gives the same value).
BigCount spanning_tree_count(int n, int deleted_index = 0);

// log τ(Gₙ) / n²; approaches 4C/π from below.
double tree_growth_ratio(int n);

// Exactly uniform spanning tree via loop-erased random walk from a fixed root.
SpanningTree random_spanning_tree(const GridGraph& g, Rng& rng);
SpanningTree random_spanning_tree(const GridGraph& g, std::uint64_t seed);

} // namespace gridplans
