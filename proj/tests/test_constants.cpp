#include "gridplans/constants.hpp"
#include "gridplans/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace gridplans;

namespace {

// Independent reference value, used only for testing.
BigFloat catalan_reference(mpfr_prec_t prec) {
    BigFloat ref(prec);
    mpfr_const_catalan(ref.raw(), MPFR_RNDN);
    return ref;
}

} // namespace

TEST_CASE("catalan constant is correct to the requested digits") {
    const BigFloat ref = catalan_reference(256);
    for (int digits : {1, 4, 10, 25, 50}) {
        const BigFloat err = abs(catalan_constant(digits) - ref);
        BigFloat bound = BigFloat::from_ui(1, 64);
        for (int i = 0; i < digits; ++i) bound /= 10;
        CHECK(err < bound);
    }
}

TEST_CASE("catalan constant matches the quoted roundings") {
    CHECK(std::abs(catalan_constant(4).to_double() - 0.9160) < 5e-5);
    CHECK(std::abs(catalan_constant(1).to_double() - 0.9) < 5e-2);
    // 15-digit literal as a direct anchor.
    CHECK(std::abs(catalan_constant(15).to_double() - 0.915965594177219) < 1e-15);
}

TEST_CASE("alternating partial sums bracket the constant") {
    const double c = catalan_constant(20).to_double();
    CHECK(c < 1.0);             // S0
    CHECK(c > 1.0 - 1.0 / 9.0); // S1
}

TEST_CASE("growth constant and its identities") {
    const GrowthConstants gc = growth_constants(12);

    CHECK(gc.b.to_significant(5) == "3.2099");
    CHECK(std::abs(gc.b.to_double() - 3.2099) < 1e-3);
    CHECK(gc.catalan.compare(0.9159) > 0);
    CHECK(gc.catalan.compare(0.9160) < 0);

    // ln b = 4C/pi to working precision.
    const double ln_b = std::log(gc.b.to_double());
    const double four_c_over_pi = 4.0 * gc.catalan.to_double() / M_PI;
    CHECK(std::abs(ln_b - four_c_over_pi) < 1e-12);
    CHECK(four_c_over_pi == doctest::Approx(1.1662436).epsilon(1e-7));

    // The published catalan field is the same computation as catalan_constant.
    CHECK(mpfr_cmp(gc.catalan.raw(), catalan_constant(12).raw()) == 0);
}

TEST_CASE("digit bounds are enforced") {
    CHECK_THROWS_AS(catalan_constant(0), MalformedInput);
    CHECK_THROWS_AS(catalan_constant(51), MalformedInput);
    CHECK_THROWS_AS(growth_constants(0), MalformedInput);
    CHECK_THROWS_AS(growth_constants(51), MalformedInput);
}
