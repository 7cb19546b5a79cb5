#include "gridplans/constants.hpp"

#include "gridplans/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gridplans {

namespace {

constexpr int kMaxDigits = 50;

void check_digits(int digits) {
    if (digits < 1 || digits > kMaxDigits)
        throw MalformedInput("digits must be in 1.." + std::to_string(kMaxDigits));
}

// Accelerated alternating summation (Chebyshev-polynomial scheme): for a
// moment sequence a_k the N-term pass has error at most 2·(3+√8)^{−N} times
// the first moment. Here a_k = 1/(2k+1)² = ∫₀¹ x^k · (−ln√x)/(2√x) dx, a
// positive measure with mass 1, so N grows linearly in the digit count.
BigFloat catalan_impl(int digits) {
    const auto prec = static_cast<mpfr_prec_t>(std::ceil((digits + 12) * 3.3220) + 32);
    const long terms = static_cast<long>(
        std::ceil((digits + 3) * std::log(10.0) / std::log(3.0 + std::sqrt(8.0)))) + 2;

    BigFloat d = pow_ui(BigFloat::from_ui(3, prec) + sqrt_ui(8, prec), terms);
    d = d + BigFloat::from_ui(1, prec) / d;
    d /= 2;

    BigFloat b = BigFloat::from_si(-1, prec);
    BigFloat c = -d;
    BigFloat s(prec);
    BigFloat t(prec);
    for (long k = 0; k < terms; ++k) {
        c = b - c;
        t = c;
        t /= 2 * k + 1;
        t /= 2 * k + 1;
        s += t;
        b *= k + terms;
        b *= k - terms;
        b *= 2;
        b /= 2 * k + 1;
        b /= k + 1;
    }
    return s / d;
}

} // namespace

BigFloat catalan_constant(int digits) {
    check_digits(digits);
    return catalan_impl(digits);
}

GrowthConstants growth_constants(int digits) {
    check_digits(digits);
    // Extra guard digits for the exp(4C/π) evaluation; the published catalan
    // field matches catalan_constant(digits) exactly.
    const BigFloat hi = catalan_impl(digits + 8);
    BigFloat ln_b = hi;
    ln_b *= 4;
    ln_b /= BigFloat::pi(hi.precision());
    return GrowthConstants{catalan_impl(digits), exp(ln_b)};
}

} // namespace gridplans
