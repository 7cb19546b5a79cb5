#pragma once

#include "gridplans/bigcount.hpp"
#include "gridplans/budget.hpp"
#include "gridplans/enumerate.hpp"
#include "gridplans/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gridplans {

// A length-2 run of the vertical border between two horizontally adjacent
// (n/3)×3 tiles. The four flanking cells are rows {top_row, top_row+1} in
// columns left_col (last column of the left tile) and right_col (= left_col+1,
// first column of the right tile).
struct BorderSegment {
    int tile_row = 0;     // which of the 3 tile rows, top to bottom
    int border_index = 0; // which border within the tile row, left to right
    int top_row = 0;
    int left_col = 0;
    int right_col = 0;
};

// One member of the lower-bound family: a ternary digit per border segment.
// Digit 0 keeps the straight border; digit 1 hands the segment's top row to
// the left district and its bottom row to the right one; digit 2 is the
// mirror. Digits follow list_border_segments order.
struct PerturbChoice {
    int n = 0;
    std::vector<std::uint8_t> digits;

    std::string ternary() const;
    static PerturbChoice from_ternary(int n, const std::string& text);
};

// All-vertical tiling by (n/3)×3 rectangles: 3 tile rows × n/3 tile columns.
Partition base_tiling(int n);

// All (n−3)·(n/6) border segments, ordered by tile row, then border, then
// segment top to bottom — the digit indexing of PerturbChoice.
std::vector<BorderSegment> list_border_segments(int n);

// Applies each segment's digit to the base tiling. Always balanced and
// connected; distinct choices give distinct partitions.
Partition apply_perturbation(const PerturbChoice& choice);

// Visits every family member once (3^digits partitions); refuses families too
// large to walk exhaustively. Digits advance like an odometer, low index first.
BigCount enumerate_family(int n, const PlanVisitor& visitor, const Budget& budget = {});

using FamilyVisitor = std::function<bool(const PerturbChoice&, const Partition&)>;
BigCount enumerate_family_choices(int n, const FamilyVisitor& visitor, const Budget& budget = {});

// Uniform family member: independent uniform digits.
Partition sample_family(int n, std::uint64_t seed);
PerturbChoice sample_family_choice(int n, std::uint64_t seed);

// Why tiles are 3 wide: the analogous swap across the border of two (n/2)×2
// tiles produces a balanced but disconnected labeling. Returns that labeling
// (n=4) together with its validation report.
std::pair<Partition, ValidationReport> width2_counterexample();

} // namespace gridplans
