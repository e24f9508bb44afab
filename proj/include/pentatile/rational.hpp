#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pentatile {

using Integer = mpz_class;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; every operation is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q", plain integers, and decimal literals ("0.25", "1e-3").
    // Decimal inputs are converted to the exact fraction they denote;
    // more than max_decimal_digits significant digits are rejected.
    static Rational parse(std::string_view text, int max_decimal_digits = 15);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(unsigned long e) const;

    // Exact square root, or nullopt if the value is not a perfect square.
    std::optional<Rational> sqrt_exact() const;

    double to_double() const { return q_.get_d(); }

    // Lossless "p/q" (plain "p" when the denominator is 1).
    std::string to_fraction_string() const;
    // Shortest-faithful decimal rendering at the given significant digits.
    std::string to_decimal_string(int significant_digits = 17) const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

// C(n, k); zero when k < 0 or k > n.
Integer binomial_big(unsigned long n, long k);

Integer factorial_big(unsigned long n);

}  // namespace pentatile
