#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridplans {

/// Dual graph of the n x n grid: one vertex per cell, edges between
/// side-adjacent cells. Cells are indexed row-major, cell = row * n + col,
/// row 0 at the top.
class GridGraph {
public:
    explicit GridGraph(int n);

    int side() const { return n_; }
    int vertex_count() const { return n_ * n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int cell(int row, int col) const { return row * n_ + col; }
    int row_of(int cell) const { return cell / n_; }
    int col_of(int cell) const { return cell % n_; }

    /// Unordered cell pairs (a < b), horizontal edges of each cell before its
    /// vertical edge, cells in row-major order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int cell) const;

    /// Up to 4 side-adjacent cells, in fixed (up, left, right, down) order.
    int neighbors(int cell, int out[4]) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Assignment of each cell to one of n districts, labels in 0..n-1.
/// Construction checks shape and label range only; whether the labeling is a
/// balanced connected plan is validate_partition's job.
class Partition {
public:
    Partition(int n, std::vector<std::uint8_t> labels);

    int side() const { return n_; }
    std::uint8_t label(int row, int col) const { return labels_[row * n_ + col]; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }

    /// Same district structure with ids renumbered in first-occurrence order
    /// of a row-major scan. Two partitions describe the same plan iff their
    /// canonicalized labels are equal.
    Partition canonicalized() const;

    bool same_plan(const Partition& other) const;

private:
    int n_;
    std::vector<std::uint8_t> labels_;
};

struct ValidationReport {
    bool balanced = false;
    bool connected = false;
    std::vector<int> district_sizes;
    std::optional<int> offending_district;

    bool valid() const { return balanced && connected; }
};

GridGraph build_grid_graph(int n);

/// Number of grid edges whose endpoints carry different labels.
int cut_score(const Partition& p);

/// Checks the plan invariants: every district has exactly n cells and induces
/// a connected subgraph. Assumes p is well-formed (same side as g).
ValidationReport validate_partition(const GridGraph& g, const Partition& p);

/// One line per row, labels space-separated, LF endings.
std::string serialize_partition(const Partition& p);

/// Inverse of serialize_partition. Accepts one optional leading line starting
/// with '#'. Rejects wrong line counts, wrong token counts, and labels
/// outside 0..n-1 as MalformedInput.
Partition parse_partition(const std::string& text);

} // namespace gridplans
