#include "gridplans/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace gridplans {

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_ui(unsigned long value, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_ui(x.v_, value, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_si(long value, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, value, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_double(double value, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_d(x.v_, value, MPFR_RNDN);
    return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_const_pi(x.v_, MPFR_RNDN);
    return x;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
    mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
    mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

namespace {

BigFloat binary(const BigFloat& a, const BigFloat& b,
                int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigFloat out(std::max(a.precision(), b.precision()));
    op(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

} // namespace

BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_add); }
BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_sub); }
BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_mul); }
BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_div); }

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_fixed(int decimals) const {
    const int size = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
    std::vector<char> buf(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_);
    return std::string(buf.data());
}

std::string BigFloat::to_significant(int digits) const {
    const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v_);
    std::vector<char> buf(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat sqrt_ui(unsigned long x, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_sqrt_ui(out.raw(), x, MPFR_RNDN);
    return out;
}

BigFloat pow_ui(const BigFloat& base, unsigned long exponent) {
    BigFloat out(base.precision());
    mpfr_pow_ui(out.raw(), base.raw(), exponent, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

} // namespace gridplans
