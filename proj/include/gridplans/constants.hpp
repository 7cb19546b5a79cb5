#pragma once

#include "gridplans/bigfloat.hpp"

namespace gridplans {

// Catalan's constant C = Σ_{k≥0} (−1)^k / (2k+1)², correct to the requested
// number of decimal digits (at most 50). Computed by accelerated alternating
// summation with a certified error bound; no stored literal is consulted.
BigFloat catalan_constant(int digits);

// The spanning-tree growth constant of the square grid, 𝔟 = exp(4C/π): the
// number of spanning trees of the n×n grid is 𝔟^{n²(1+o(1))}.
struct GrowthConstants {
    BigFloat catalan;
    BigFloat b;
};

GrowthConstants growth_constants(int digits);

} // namespace gridplans
