#pragma once

#include <cstdint>

#include "pentatile/bigfloat.hpp"
#include "pentatile/linalg.hpp"
#include "pentatile/rational.hpp"
#include "pentatile/six_vertex.hpp"

namespace pentatile {

/// Pentagonal domain: an Aztec diamond of order r+s with a frozen triangular
/// corner of size s removed. For s >= 1 the scaled geometry is
/// omega = s/(r+s) in (0,1) and theta = (2r+s)/s in (1,inf).
struct PentagonSpec {
    int r;
    int s;

    PentagonSpec(int r_, int s_);
    int n() const { return r + s; }
    double omega() const { return static_cast<double>(s) / n(); }
    double theta() const;  // requires s >= 1
};

inline constexpr std::uint64_t kDefaultTermCap = 10'000'000;

// Probability that all marked edges of the staircase event point left,
// as a product prefactor times an s x s determinant of residue polynomials,
// evaluated exactly. Requires alpha in (0, 1).
Rational gefp_det(const EmptinessSpec& spec, const Rational& alpha);

// Triangular-corner emptiness probability, determinant route.
Rational tdefp_det(const PentagonSpec& spec, const Rational& alpha);

// Triangular-corner emptiness probability as the explicit weighted sum over
// weakly increasing (m_1..m_s) in [0, r). Throws TermCapError when the number
// of terms C(r-1+s, s) exceeds the cap.
Rational tdefp_sum(const PentagonSpec& spec, const Rational& alpha,
                   std::uint64_t term_cap = kDefaultTermCap);

// Reduced form g_{r,s} = alpha^{s(s+1)/4} det[...], satisfying
// T_{r,s} = ((1-alpha)/sqrt(alpha))^{s(s+1)/2} g_{r,s}. Exact for alpha in
// (0, 1] whenever the alpha power resolves to a rational (integer exponent,
// or alpha a perfect square); otherwise throws IrrationalPrefactorError.
Rational g_rs(const PentagonSpec& spec, const Rational& alpha);

// The alpha -> 1 limit of g_{r,s}: product formula
//   C(r+s-1, s) prod_j j!/(2j-1)! prod_{j<k} (2r+j+k-2),
// cross-checked internally against the determinant of binomials
// det[C(r+j+k-2, r-j+k-1)].
Rational c_rs(int r, int s);

// Partition function of the N x N domain-wall lattice in the parametrized
// weights: rho^{N(N+1)/2}, independent of alpha.
Rational z_ff(int n, const Rational& rho, const Rational& alpha);

// Partition function of the pentagonal domain:
//   rho^{(r+s)(r+s+1)/2 - s(s+1)/4} (1-alpha)^{-s(s+1)/4} T_{r,s}.
// The quarter-integer powers must resolve to rationals for the exact route;
// otherwise IrrationalPrefactorError is thrown and the float route applies.
Rational z_pentagon(const PentagonSpec& spec, const Rational& rho, const Rational& alpha);
BigFloat z_pentagon_float(const PentagonSpec& spec, const Rational& rho, const Rational& alpha,
                          mpfr_prec_t precision);

// Parity-unconstrained companion sum: s! sum over 1 <= h_1 < ... < h_s <= 2r+s-2
// of prod sqrt(alpha)^{h_j} prod (h_k - h_j). Requires alpha to be a perfect
// square so that sqrt(alpha) is rational.
Rational symmetrized_loggas(const PentagonSpec& spec, const Rational& alpha,
                            std::uint64_t term_cap = kDefaultTermCap);

// Empirical ratio g_{r,s} / symmetrized sum.
BigFloat kappa_estimate(const PentagonSpec& spec, const Rational& alpha,
                        mpfr_prec_t precision = 128);

// Floating-point determinant route for large s; the relative error is
// bounded per the det_float contract.
BigFloat tdefp_float(const PentagonSpec& spec, const BigFloat& alpha, mpfr_prec_t precision);

}  // namespace pentatile
