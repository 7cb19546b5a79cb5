#include "gridplans/perturb.hpp"

#include "gridplans/errors.hpp"
#include "gridplans/rng.hpp"

#include <algorithm>

namespace gridplans {

namespace {

void check_residue(int n) {
    if (n < 6 || n % 6 != 0)
        throw UnsupportedResidue("perturbation family requires n ≡ 0 (mod 6), n ≥ 6");
}

std::size_t family_digits(int n) {
    return static_cast<std::size_t>(n - 3) * static_cast<std::size_t>(n / 6);
}

} // namespace

std::string PerturbChoice::ternary() const {
    std::string out(digits.size(), '0');
    for (std::size_t i = 0; i < digits.size(); ++i)
        out[i] = static_cast<char>('0' + digits[i]);
    return out;
}

PerturbChoice PerturbChoice::from_ternary(int n, const std::string& text) {
    check_residue(n);
    if (text.size() != family_digits(n))
        throw MalformedInput("choice string must have " + std::to_string(family_digits(n)) +
                             " digits for n=" + std::to_string(n));
    PerturbChoice choice;
    choice.n = n;
    choice.digits.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '2') throw MalformedInput("choice digits must be 0, 1, or 2");
        choice.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return choice;
}

Partition base_tiling(int n) {
    check_residue(n);
    const int tile_rows = n / 3;
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            labels[static_cast<std::size_t>(r) * n + c] =
                static_cast<std::uint8_t>((r / tile_rows) * (n / 3) + c / 3);
    return Partition(n, std::move(labels));
}

std::vector<BorderSegment> list_border_segments(int n) {
    check_residue(n);
    std::vector<BorderSegment> out;
    out.reserve(family_digits(n));
    const int tile_rows = n / 3; // rows per tile
    for (int t = 0; t < 3; ++t)
        for (int b = 0; b + 1 < n / 3; ++b)
            for (int s = 0; s < tile_rows / 2; ++s) {
                BorderSegment seg;
                seg.tile_row = t;
                seg.border_index = b;
                seg.top_row = t * tile_rows + 2 * s;
                seg.left_col = 3 * (b + 1) - 1;
                seg.right_col = 3 * (b + 1);
                out.push_back(seg);
            }
    return out;
}

Partition apply_perturbation(const PerturbChoice& choice) {
    check_residue(choice.n);
    const auto segments = list_border_segments(choice.n);
    if (choice.digits.size() != segments.size())
        throw MalformedInput("choice has " + std::to_string(choice.digits.size()) +
                             " digits, expected " + std::to_string(segments.size()));
    const int n = choice.n;
    std::vector<std::uint8_t> labels = base_tiling(n).labels();
    auto at = [&](int r, int c) -> std::uint8_t& {
        return labels[static_cast<std::size_t>(r) * n + c];
    };
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const BorderSegment& seg = segments[i];
        const std::uint8_t left = at(seg.top_row, seg.left_col);
        const std::uint8_t right = at(seg.top_row, seg.right_col);
        switch (choice.digits[i]) {
        case 0:
            break;
        case 1: // top flank row → left district, bottom flank row → right
            at(seg.top_row, seg.right_col) = left;
            at(seg.top_row + 1, seg.left_col) = right;
            break;
        case 2: // mirror: top row → right district, bottom row → left
            at(seg.top_row, seg.left_col) = right;
            at(seg.top_row + 1, seg.right_col) = left;
            break;
        default:
            throw MalformedInput("choice digits must be 0, 1, or 2");
        }
    }
    return Partition(n, std::move(labels));
}

BigCount enumerate_family_choices(int n, const FamilyVisitor& visitor, const Budget& budget) {
    check_residue(n);
    const std::size_t k = family_digits(n);
    if (k > 12) // 3^12 ≈ 5·10⁵ walks in seconds; the next size (n=12) has 3¹⁸
        throw BudgetExceeded("family of 3^" + std::to_string(k) +
                             " members is too large to enumerate; use sample_family");
    const BudgetGuard guard(budget);
    PerturbChoice choice;
    choice.n = n;
    choice.digits.assign(k, 0);
    BigCount count = 0;
    while (true) {
        guard.check();
        count += 1; // every visit counts, aborted ones included
        if (!visitor(choice, apply_perturbation(choice))) break;
        // Odometer increment over ternary digits.
        std::size_t pos = 0;
        while (pos < k && choice.digits[pos] == 2) choice.digits[pos++] = 0;
        if (pos == k) break;
        ++choice.digits[pos];
    }
    return count;
}

BigCount enumerate_family(int n, const PlanVisitor& visitor, const Budget& budget) {
    return enumerate_family_choices(
        n, [&](const PerturbChoice&, const Partition& p) { return visitor(p); }, budget);
}

PerturbChoice sample_family_choice(int n, std::uint64_t seed) {
    check_residue(n);
    Rng rng(seed);
    PerturbChoice choice;
    choice.n = n;
    choice.digits.resize(family_digits(n));
    for (auto& d : choice.digits) d = static_cast<std::uint8_t>(rng.bounded(3));
    return choice;
}

Partition sample_family(int n, std::uint64_t seed) {
    return apply_perturbation(sample_family_choice(n, seed));
}

std::pair<Partition, ValidationReport> width2_counterexample() {
    // Base: four 2×2 tiles on the 4×4 grid. Swapping the two facing cell
    // pairs across the upper vertical border keeps sizes but strands each
    // upper district in two separated columns.
    std::vector<std::uint8_t> labels = {
        0, 0, 1, 1,
        0, 0, 1, 1,
        2, 2, 3, 3,
        2, 2, 3, 3,
    };
    auto at = [&](int r, int c) -> std::uint8_t& { return labels[static_cast<std::size_t>(r) * 4 + c]; };
    for (int r = 0; r < 2; ++r) std::swap(at(r, 1), at(r, 2));
    Partition p(4, std::move(labels));
    return {p, validate_partition(build_grid_graph(4), p)};
}

} // namespace gridplans
