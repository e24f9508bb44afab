#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pentatile/bigfloat.hpp"
#include "pentatile/rational.hpp"

namespace pentatile {

/// Dense polynomial in one variable with exact rational coefficients,
/// kept in canonical form (trailing zero coefficients trimmed).
class AlphaPoly {
public:
    AlphaPoly() = default;
    explicit AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static AlphaPoly constant(Rational v) { return AlphaPoly({std::move(v)}); }
    static AlphaPoly monomial(std::size_t degree, Rational coeff);

    bool is_zero() const { return c_.empty(); }
    // Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    // Coefficient of x^i (zero beyond the stored degree).
    const Rational& coeff(std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }

    Rational eval(const Rational& x) const;
    BigFloat eval(const BigFloat& x) const;

    AlphaPoly operator-() const;
    friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b);
    friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b);
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly scaled(const Rational& k) const;

    // Synthetic division by (x - root): returns quotient, sets remainder.
    AlphaPoly divide_linear(const Rational& root, Rational& remainder) const;

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;  // human-readable, for diagnostics

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// The polynomial in a equal to the sum of residues of
///     x^l / ((x - a)^m (x - 1)^n)
/// over its finite poles. Computed division-free by reading off the
/// coefficient of 1/x in the expansion at infinity:
///     sum_{i+j = l-m-n+1} C(m+i-1, i) C(n+j-1, j) a^i.
/// Zero polynomial when l - m - n + 1 < 0 (no residue survives).
AlphaPoly residue_poly(long l, long m, long n);

}  // namespace pentatile
