#include "pentatile/six_vertex.hpp"

#include <stdexcept>

#include "pentatile/errors.hpp"

namespace pentatile {

VertexWeights VertexWeights::free_fermion(const Rational& rho, const Rational& alpha) {
    if (rho.sign() <= 0) throw std::domain_error("VertexWeights: rho must be positive");
    if (alpha.sign() < 0 || alpha > Rational(1))
        throw std::domain_error("VertexWeights: alpha must lie in [0, 1]");
    // w1 w2 + w3 w4 = w5 w6 expressed through the stored squares
    if (rho * (Rational(1) - alpha) + rho * alpha != rho)
        throw std::logic_error("VertexWeights: free-fermion identity violated");
    VertexWeights w;
    w.parametrized_ = true;
    w.rho_ = rho;
    w.alpha_ = alpha;
    return w;
}

VertexWeights VertexWeights::generic(const std::array<Rational, 6>& w) {
    for (const auto& wi : w)
        if (wi.sign() < 0) throw std::domain_error("VertexWeights: negative weight");
    VertexWeights v;
    v.parametrized_ = false;
    v.w_ = w;
    return v;
}

Rational VertexWeights::config_weight(const std::array<int, 7>& counts) const {
    if (!parametrized_) {
        Rational w(1);
        for (int t = 1; t <= 6; ++t)
            if (counts[t] > 0) w *= w_[t - 1].pow(static_cast<unsigned long>(counts[t]));
        return w;
    }
    const int n12 = counts[1] + counts[2];
    const int n34 = counts[3] + counts[4];
    if (n12 % 2 != 0 || n34 % 2 != 0)
        throw std::logic_error("VertexWeights: odd multiplicity of paired vertex types");
    const unsigned long e_rho = static_cast<unsigned long>((n12 + n34) / 2 + counts[6]);
    Rational w = rho_.pow(e_rho);
    if (n12 > 0) w *= (Rational(1) - alpha_).pow(static_cast<unsigned long>(n12 / 2));
    if (n34 > 0) w *= alpha_.pow(static_cast<unsigned long>(n34 / 2));
    return w;
}

EmptinessSpec::EmptinessSpec(int n_, std::vector<int> r_) : n(n_), r(std::move(r_)) {
    if (n < 1) throw std::domain_error("EmptinessSpec: n must be positive");
    if (static_cast<int>(r.size()) > n) throw std::domain_error("EmptinessSpec: s exceeds n");
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] < 1 || r[j] > n) throw std::domain_error("EmptinessSpec: r_j out of [1, n]");
        if (j > 0 && r[j] < r[j - 1])
            throw std::domain_error("EmptinessSpec: r must be weakly increasing");
    }
}

std::vector<int> EmptinessSpec::lambda() const {
    std::vector<int> l(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) l[j] = n - r[j];
    return l;
}

EmptinessSpec EmptinessSpec::triangular(int r, int s) {
    if (r < 1 || s < 0) throw std::domain_error("EmptinessSpec: need r >= 1, s >= 0");
    std::vector<int> rs(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) rs[j - 1] = r + j - 1;  // = (r+s) - s + j - 1
    return EmptinessSpec(r + s, std::move(rs));
}

namespace {

// Horizontal edge arrows: 0 = left, 1 = right. Vertical: 0 = up, 1 = down.
// At a vertex, incoming edges are: left edge pointing right, top edge pointing
// down, right edge pointing left, bottom edge pointing up. The ice rule fixes
// the options per (left, top) state:
struct Option {
    std::uint8_t type, h_out, v_out;
};
constexpr Option kOptsRU[] = {{1, 1, 0}, {5, 0, 1}};
constexpr Option kOptsLD[] = {{2, 0, 1}, {6, 1, 0}};
constexpr Option kOptsRD[] = {{3, 1, 1}};
constexpr Option kOptsLU[] = {{4, 0, 0}};

std::pair<const Option*, int> options_for(int h, int v) {
    if (h == 1 && v == 0) return {kOptsRU, 2};
    if (h == 0 && v == 1) return {kOptsLD, 2};
    if (h == 1 && v == 1) return {kOptsRD, 1};
    return {kOptsLU, 1};
}

class Enumerator {
public:
    Enumerator(int n, const std::function<void(const SixVertexConfig&)>& visit)
        : n_(n), visit_(visit) {
        cfg_.n = n;
        cfg_.types.assign(static_cast<std::size_t>(n) * n, 0);
        cfg_.left_edge_mask.assign(static_cast<std::size_t>(n), 0);
        cfg_.type_counts.fill(0);
        vmask_.assign(static_cast<std::size_t>(n), 1);  // top boundary: all arrows down
    }

    void run() { row(0); }

private:
    void row(int i) {
        if (i == n_) {
            visit_(cfg_);
            return;
        }
        cell(i, 0, /*h=*/0);  // left boundary: arrow points left (outgoing)
    }

    void cell(int i, int c, int h) {
        if (c == n_) {
            if (h == 1) row(i + 1);  // right boundary: arrow must point right
            return;
        }
        if (h == 0)
            cfg_.left_edge_mask[i] |= 1u << c;
        else
            cfg_.left_edge_mask[i] &= ~(1u << c);

        const auto [opts, cnt] = options_for(h, vmask_[c]);
        const int saved_v = vmask_[c];
        for (int k = 0; k < cnt; ++k) {
            const Option& o = opts[k];
            if (i == n_ - 1 && o.v_out == 1) continue;  // bottom boundary: arrows up
            cfg_.types[static_cast<std::size_t>(i) * n_ + c] = o.type;
            ++cfg_.type_counts[o.type];
            vmask_[c] = o.v_out;
            cell(i, c + 1, o.h_out);
            --cfg_.type_counts[o.type];
        }
        vmask_[c] = saved_v;
    }

    int n_;
    const std::function<void(const SixVertexConfig&)>& visit_;
    SixVertexConfig cfg_;
    std::vector<int> vmask_;  // vertical edge states entering the current row
};

void check_size(int n, int n_max) {
    if (n < 1) throw std::domain_error("enumerate_dwbc: n must be positive");
    if (n > n_max)
        throw SizeLimitError("enumerate_dwbc: n = " + std::to_string(n) +
                             " exceeds the enumeration limit " + std::to_string(n_max));
}

}  // namespace

void enumerate_dwbc(int n, const std::function<void(const SixVertexConfig&)>& visit, int n_max) {
    check_size(n, n_max);
    Enumerator(n, visit).run();
}

std::uint64_t count_dwbc(int n, int n_max) {
    std::uint64_t count = 0;
    enumerate_dwbc(n, [&](const SixVertexConfig&) { ++count; }, n_max);
    return count;
}

Rational z_bruteforce(int n, const VertexWeights& w, int n_max) {
    Rational z;
    enumerate_dwbc(n, [&](const SixVertexConfig& cfg) { z += w.config_weight(cfg.type_counts); },
                   n_max);
    return z;
}

Rational gefp_bruteforce(const EmptinessSpec& spec, const VertexWeights& w, int n_max) {
    const int n = spec.n;
    const int s = spec.s();
    Rational z, hit;
    enumerate_dwbc(
        n,
        [&](const SixVertexConfig& cfg) {
            const Rational weight = w.config_weight(cfg.type_counts);
            z += weight;
            bool edge_ok = true;
            for (int j = 0; j < s && edge_ok; ++j)
                edge_ok = (cfg.left_edge_mask[j] >> (n - spec.r[j])) & 1u;
            bool frozen_ok = true;
            for (int j = 0; j < s && frozen_ok; ++j)
                for (int c = 0; c < n - spec.r[j] && frozen_ok; ++c)
                    frozen_ok = cfg.type_at(j, c) == 2;
            if (edge_ok != frozen_ok)
                throw std::logic_error("gefp_bruteforce: event filters disagree");
            if (edge_ok) hit += weight;
        },
        n_max);
    return hit / z;
}

}  // namespace pentatile
