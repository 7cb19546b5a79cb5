#include "gridplans/bounds.hpp"
#include "gridplans/errors.hpp"
#include "gridplans/perturb.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace gridplans;

TEST_CASE("base tiling is a valid vertical-strip plan") {
    for (int n : {6, 12}) {
        const Partition base = base_tiling(n);
        const GridGraph g = build_grid_graph(n);
        const ValidationReport rep = validate_partition(g, base);
        CHECK(rep.valid());
        // (n/3)x3 rectangles: label constant over each tile.
        CHECK(base.label(0, 0) == base.label(n / 3 - 1, 2));
        CHECK(base.label(0, 0) != base.label(0, 3));
        CHECK(base.label(0, 0) != base.label(n / 3, 0));
    }
    CHECK_THROWS_AS(base_tiling(3), UnsupportedResidue);
    CHECK_THROWS_AS(base_tiling(8), UnsupportedResidue);
    CHECK_THROWS_AS(base_tiling(0), UnsupportedResidue);
}

TEST_CASE("border segments tile the interior borders") {
    const auto segs6 = list_border_segments(6);
    CHECK(segs6.size() == 3); // (6-3)*(6/6)
    const auto segs12 = list_border_segments(12);
    CHECK(segs12.size() == 18); // (12-3)*(12/6)

    for (int n : {6, 12}) {
        const auto segs = list_border_segments(n);
        const Partition base = base_tiling(n);
        std::set<std::pair<int, int>> rows_used; // (left_col, row) pairs, disjointness
        for (const auto& s : segs) {
            CHECK(s.right_col == s.left_col + 1);
            CHECK(s.left_col % 3 == 2); // last column of a 3-wide tile
            CHECK(s.top_row >= s.tile_row * (n / 3));
            CHECK(s.top_row + 1 < (s.tile_row + 1) * (n / 3));
            // Straddles a genuine border of the base tiling.
            CHECK(base.label(s.top_row, s.left_col) != base.label(s.top_row, s.right_col));
            for (int dr = 0; dr < 2; ++dr) {
                const bool fresh = rows_used.insert({s.left_col, s.top_row + dr}).second;
                CHECK(fresh);
            }
        }
    }
}

TEST_CASE("all-zero choice reproduces the base tiling") {
    PerturbChoice zero;
    zero.n = 6;
    zero.digits.assign(3, 0);
    CHECK(apply_perturbation(zero).labels() == base_tiling(6).labels());
}

TEST_CASE("single-digit perturbations only touch their own segment") {
    const int n = 6;
    const auto segs = list_border_segments(n);
    const Partition base = base_tiling(n);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::uint8_t d : {1, 2}) {
            PerturbChoice c;
            c.n = n;
            c.digits.assign(segs.size(), 0);
            c.digits[i] = d;
            const Partition p = apply_perturbation(c);
            int diffs = 0;
            for (int r = 0; r < n; ++r)
                for (int col = 0; col < n; ++col)
                    if (p.label(r, col) != base.label(r, col)) {
                        ++diffs;
                        CHECK((r == segs[i].top_row || r == segs[i].top_row + 1));
                        CHECK((col == segs[i].left_col || col == segs[i].right_col));
                    }
            CHECK(diffs > 0);
            CHECK(diffs <= 2);
        }
    }
}

TEST_CASE("every family member is a valid distinct plan") {
    const GridGraph g = build_grid_graph(6);
    std::set<std::string> seen;
    const BigCount total = enumerate_family(
        6,
        [&](const Partition& p) {
            CHECK(validate_partition(g, p).valid());
            seen.insert(serialize_partition(p.canonicalized()));
            return true;
        });
    CHECK(total == 27);
    CHECK(seen.size() == 27);
    CHECK(total == lower_bound_exact(6));
}

TEST_CASE("family enumeration respects visitor stop and size refusal") {
    int visits = 0;
    const BigCount partial = enumerate_family(6, [&](const Partition&) { return ++visits < 5; });
    CHECK(visits == 5);
    CHECK(partial == 5);
    // 3^18 members: exhaustive walk refused.
    CHECK_THROWS_AS(enumerate_family(12, [](const Partition&) { return true; }),
                    BudgetExceeded);
}

TEST_CASE("choices round-trip through ternary text") {
    PerturbChoice c;
    c.n = 6;
    c.digits = {2, 0, 1};
    CHECK(c.ternary() == "201");
    const PerturbChoice back = PerturbChoice::from_ternary(6, "201");
    CHECK(back.digits == c.digits);
    CHECK(apply_perturbation(back).labels() == apply_perturbation(c).labels());

    CHECK_THROWS_AS(PerturbChoice::from_ternary(6, "20"), MalformedInput);   // wrong length
    CHECK_THROWS_AS(PerturbChoice::from_ternary(6, "2013"), MalformedInput); // wrong length
    CHECK_THROWS_AS(PerturbChoice::from_ternary(6, "2a1"), MalformedInput);  // bad digit

    PerturbChoice bad;
    bad.n = 6;
    bad.digits = {3, 0, 0};
    CHECK_THROWS_AS(apply_perturbation(bad), MalformedInput);
    bad.digits = {0, 0};
    CHECK_THROWS_AS(apply_perturbation(bad), MalformedInput);
}

TEST_CASE("sampled family members are valid at sizes beyond enumeration") {
    const GridGraph g12 = build_grid_graph(12);
    std::set<std::string> distinct;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Partition p = sample_family(12, seed);
        CHECK(validate_partition(g12, p).valid());
        distinct.insert(serialize_partition(p));
        CHECK(sample_family(12, seed).labels() == p.labels()); // deterministic
    }
    CHECK(distinct.size() > 250); // 3^18 members: repeats unlikely

    const GridGraph g18 = build_grid_graph(18);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(validate_partition(g18, sample_family(18, seed)).valid());

    const PerturbChoice c = sample_family_choice(12, 7);
    CHECK(c.digits.size() == 18);
    CHECK(apply_perturbation(c).labels() == sample_family(12, 7).labels());
}

TEST_CASE("width-2 tiles break the construction") {
    const auto [p, rep] = width2_counterexample();
    CHECK(p.side() == 4);
    CHECK(rep.balanced);
    CHECK_FALSE(rep.connected);
    CHECK_FALSE(rep.valid());
    REQUIRE(rep.offending_district.has_value());
}
