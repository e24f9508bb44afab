#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pentatile/rational.hpp"

namespace pentatile {

// Arrow configuration of an N x N ice-rule lattice with domain wall boundary
// conditions, stored as the vertex type (1..6) at each site. Rows are counted
// from the top, columns from the left.
struct SixVertexConfig {
    int n = 0;
    std::vector<std::uint8_t> types;             // row-major n*n
    std::array<int, 7> type_counts{};            // indexed by type, [0] unused
    std::vector<std::uint32_t> left_edge_mask;   // per row; bit c set iff the edge
                                                 // left of (row, col c) points left

    std::uint8_t type_at(int row, int col) const {
        return types[static_cast<std::size_t>(row) * n + col];
    }
};

/// Boltzmann weights of the six vertex types. Two exact forms are supported:
/// generic nonnegative rational weights, and the one-parameter family
///   w1 = w2 = sqrt(rho(1-alpha)), w3 = w4 = sqrt(rho alpha), w5 = 1, w6 = rho,
/// which satisfies w1 w2 + w3 w4 = w5 w6. The square roots are irrational in
/// general, so the parametrized form stores the squared weights and computes
/// configuration weights through the even multiplicities of types {1,2} and
/// {3,4} that domain wall boundary conditions guarantee.
class VertexWeights {
public:
    static VertexWeights free_fermion(const Rational& rho, const Rational& alpha);
    static VertexWeights generic(const std::array<Rational, 6>& w);

    bool is_free_fermion_form() const { return parametrized_; }
    const Rational& rho() const { return rho_; }
    const Rational& alpha() const { return alpha_; }

    // Exact weight of a configuration with the given per-type vertex counts.
    Rational config_weight(const std::array<int, 7>& counts) const;

private:
    VertexWeights() = default;
    bool parametrized_ = false;
    Rational rho_, alpha_;
    std::array<Rational, 6> w_{};  // generic form only
};

/// Staircase emptiness event: rows j = 1..s, with the marked edge in row j
/// lying left of the vertex in the r_j-th column counted from the right.
struct EmptinessSpec {
    int n;
    std::vector<int> r;  // weakly increasing, each in [1, n]

    EmptinessSpec(int n_, std::vector<int> r_);
    int s() const { return static_cast<int>(r.size()); }
    // Frozen-corner row lengths lambda_j = n - r_j (weakly decreasing).
    std::vector<int> lambda() const;
    // The triangular specialization r_j = n - s + j - 1 with n = r + s.
    static EmptinessSpec triangular(int r, int s);
};

inline constexpr int kDefaultNMax = 7;

// Visits every DWBC configuration of the n x n lattice exactly once.
// The visited object is reused between calls; copy it to retain it.
void enumerate_dwbc(int n, const std::function<void(const SixVertexConfig&)>& visit,
                    int n_max = kDefaultNMax);

std::uint64_t count_dwbc(int n, int n_max = kDefaultNMax);

// Partition function: sum of configuration weights.
Rational z_bruteforce(int n, const VertexWeights& w, int n_max = kDefaultNMax);

// Probability that all marked edges point left. Evaluated with both the
// edge-orientation filter and the frozen-corner (all type 2) filter, which
// must select the same configurations.
Rational gefp_bruteforce(const EmptinessSpec& spec, const VertexWeights& w,
                         int n_max = kDefaultNMax);

}  // namespace pentatile
