#pragma once

#include <mpfr.h>

#include <string>

namespace gridplans {

// Arbitrary-precision real with value semantics. Precision is set at
// construction (bits); binary operators work at the wider operand's precision
// and round to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_ui(unsigned long value, mpfr_prec_t prec);
    static BigFloat from_si(long value, mpfr_prec_t prec);
    static BigFloat from_double(double value, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator*=(long rhs);
    BigFloat& operator/=(long rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
    friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);
    BigFloat operator-() const;

    int compare(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    int compare(double rhs) const { return mpfr_cmp_d(v_, rhs); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_fixed(int decimals) const;      // "%.*f" style
    std::string to_significant(int digits) const;  // "%.*g" style

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt_ui(unsigned long x, mpfr_prec_t prec);
BigFloat pow_ui(const BigFloat& base, unsigned long exponent);
BigFloat abs(const BigFloat& x);

} // namespace gridplans
