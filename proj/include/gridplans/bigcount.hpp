#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace gridplans {

/// Exact nonnegative integer for plan counts, spanning-tree counts and bounds.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

/// Natural log of a positive BigCount, safe for values far beyond double range.
inline double natural_log(const BigCount& v) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace gridplans
