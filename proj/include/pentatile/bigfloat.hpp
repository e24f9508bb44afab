#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "pentatile/rational.hpp"

namespace pentatile {

/// Arbitrary-precision binary float. The working precision (>= 64 bits) is
/// fixed when a value is created; binary operations compute at the larger of
/// the two operand precisions.
class BigFloat {
public:
    static constexpr mpfr_prec_t min_precision = 64;

    explicit BigFloat(mpfr_prec_t prec = min_precision) { mpfr_init2(x_, clamp(prec)); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from(const Rational& q, mpfr_prec_t prec);
    static BigFloat from(const Integer& n, mpfr_prec_t prec);
    static BigFloat from(double d, mpfr_prec_t prec);
    static BigFloat from(long n, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
    BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }
    BigFloat& operator-=(const BigFloat& o) { *this = *this - o; return *this; }
    BigFloat& operator*=(const BigFloat& o) { *this = *this * o; return *this; }
    BigFloat& operator/=(const BigFloat& o) { *this = *this / o; return *this; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    BigFloat abs() const;
    BigFloat log() const;
    BigFloat pow_ui(unsigned long e) const;
    // base^(p/q) for positive base, via mpfr pow
    BigFloat pow(const Rational& e) const;

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // log2 of |x| (floor), for bit-agreement diagnostics; INT_MIN-ish for 0
    long exponent2() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(x_); }
    std::string to_string(int significant_digits = 17) const;

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, min_precision); }
    using TernaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat binop(const BigFloat& a, const BigFloat& b, TernaryFn fn);

    mpfr_t x_;
};

// Number of leading bits on which a and b agree, i.e. -log2(|a-b|/|a|),
// saturated at the smaller operand precision. Used by accuracy tests.
long matching_bits(const BigFloat& a, const BigFloat& b);

}  // namespace pentatile
