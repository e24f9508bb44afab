#include "pentatile/gefp.hpp"

#include <optional>
#include <stdexcept>

#include "pentatile/alpha_poly.hpp"
#include "pentatile/errors.hpp"

namespace pentatile {

PentagonSpec::PentagonSpec(int r_, int s_) : r(r_), s(s_) {
    if (r < 1) throw std::domain_error("PentagonSpec: r must be positive");
    if (s < 0) throw std::domain_error("PentagonSpec: s must be nonnegative");
}

double PentagonSpec::theta() const {
    if (s < 1) throw std::domain_error("PentagonSpec::theta: undefined for s = 0");
    return static_cast<double>(2 * r + s) / s;
}

namespace {

void check_alpha_open_unit(const Rational& alpha) {
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::domain_error("alpha must lie in (0, 1)");
}

Rational one_minus(const Rational& alpha) { return Rational(1) - alpha; }

}  // namespace

Rational gefp_det(const EmptinessSpec& spec, const Rational& alpha) {
    check_alpha_open_unit(alpha);
    const int n = spec.n;
    const int s = spec.s();
    if (s == 0) return Rational(1);

    Rational prefactor(1);
    const Rational om = one_minus(alpha);
    for (int j = 0; j < s; ++j)
        prefactor *= om.pow(static_cast<unsigned long>(n - spec.r[j]));

    RationalMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k)
            m(j - 1, k - 1) =
                residue_poly(n - s + j + k - 2, n - spec.r[s - j], j).eval(alpha);
    return prefactor * det_exact(m);
}

Rational tdefp_det(const PentagonSpec& spec, const Rational& alpha) {
    check_alpha_open_unit(alpha);
    const int s = spec.s;
    if (s == 0) return Rational(1);
    RationalMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k)
            m(j - 1, k - 1) = residue_poly(spec.r + j + k - 2, j, j).eval(alpha);
    return one_minus(alpha).pow(static_cast<unsigned long>(s) * (s + 1) / 2) * det_exact(m);
}

namespace {

struct TupleSum {
    int r, s;
    Rational alpha;
    Rational total;
    std::vector<int> m;
    Integer pair_denominator;  // prod_{j<k} (k-j), constant across tuples

    void run() {
        pair_denominator = 1;
        for (int d = 1; d < s; ++d) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(s - d));
            pair_denominator *= p;
        }
        m.assign(static_cast<std::size_t>(s), 0);
        descend(0, 0);
    }

    void descend(int j, int lo) {
        if (j == s) {
            add_term();
            return;
        }
        for (int v = lo; v < r; ++v) {
            m[static_cast<std::size_t>(j)] = v;
            descend(j + 1, v);
        }
    }

    void add_term() {
        unsigned long esum = 0;
        for (int v : m) esum += static_cast<unsigned long>(v);
        Integer num(1);
        for (int j = 0; j < s; ++j)
            for (int k = j + 1; k < s; ++k) num *= 2 * (m[k] - m[j]) + (k - j);
        total += alpha.pow(esum) * Rational(num, pair_denominator);
    }
};

}  // namespace

Rational tdefp_sum(const PentagonSpec& spec, const Rational& alpha, std::uint64_t term_cap) {
    check_alpha_open_unit(alpha);
    const int s = spec.s;
    if (s == 0) return Rational(1);
    const Integer count = binomial_big(static_cast<unsigned long>(spec.r - 1 + s), s);
    if (count > Integer(static_cast<unsigned long>(term_cap)))
        throw TermCapError("tdefp_sum: " + count.get_str() + " terms exceed the cap of " +
                           std::to_string(term_cap));
    TupleSum ts{spec.r, s, alpha, Rational(), {}, Integer()};
    ts.run();
    return one_minus(alpha).pow(static_cast<unsigned long>(s) * (s + 1) / 2) * ts.total;
}

Rational g_rs(const PentagonSpec& spec, const Rational& alpha) {
    if (alpha.sign() <= 0 || alpha > Rational(1))
        throw std::domain_error("g_rs: alpha must lie in (0, 1]");
    const int s = spec.s;
    if (s == 0) return Rational(1);

    RationalMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k)
            m(j - 1, k - 1) = residue_poly(spec.r + j + k - 2, j, j).eval(alpha);
    const Rational det = det_exact(m);

    const unsigned long e2 = static_cast<unsigned long>(s) * (s + 1) / 2;  // alpha^{e2/2}
    if (e2 % 2 == 0) return alpha.pow(e2 / 2) * det;
    if (auto root = alpha.sqrt_exact()) return root->pow(e2) * det;
    throw IrrationalPrefactorError(
        "g_rs: alpha^{s(s+1)/4} is irrational here; pass a perfect-square alpha");
}

Rational c_rs(int r, int s) {
    if (r < 1 || s < 0) throw std::domain_error("c_rs: need r >= 1, s >= 0");
    Rational product(binomial_big(static_cast<unsigned long>(r + s - 1), s));
    for (int j = 1; j <= s; ++j)
        product *= Rational(factorial_big(static_cast<unsigned long>(j)),
                            factorial_big(static_cast<unsigned long>(2 * j - 1)));
    for (int j = 1; j <= s; ++j)
        for (int k = j + 1; k <= s; ++k) product *= Rational(2 * r + j + k - 2);

    // Cross-check against the determinant of binomials.
    RationalMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k)
            m(j - 1, k - 1) =
                Rational(binomial_big(static_cast<unsigned long>(r + j + k - 2), r - j + k - 1));
    if (det_exact(m) != product)
        throw std::logic_error("c_rs: product formula and binomial determinant disagree");
    return product;
}

Rational z_ff(int n, const Rational& rho, [[maybe_unused]] const Rational& alpha) {
    if (n < 1) throw std::domain_error("z_ff: n must be positive");
    if (rho.sign() <= 0) throw std::domain_error("z_ff: rho must be positive");
    return rho.pow(static_cast<unsigned long>(n) * (n + 1) / 2);
}

namespace {

// base^(num/4), exact, or nullopt when the radical is irrational.
std::optional<Rational> quarter_pow_exact(const Rational& base, long num) {
    if (base.sign() <= 0) return std::nullopt;
    long den = 4;
    while (num % 2 == 0 && den > 1) {
        num /= 2;
        den /= 2;
    }
    Rational root = base;
    for (long d = den; d > 1; d /= 2) {
        auto sq = root.sqrt_exact();
        if (!sq) return std::nullopt;
        root = *sq;
    }
    const Rational p = root.pow(static_cast<unsigned long>(num < 0 ? -num : num));
    return num < 0 ? Rational(1) / p : p;
}

}  // namespace

Rational z_pentagon(const PentagonSpec& spec, const Rational& rho, const Rational& alpha) {
    check_alpha_open_unit(alpha);
    if (rho.sign() <= 0) throw std::domain_error("z_pentagon: rho must be positive");
    const long n = spec.n();
    const long q = static_cast<long>(spec.s) * (spec.s + 1);  // s(s+1)
    const auto rho_pow = quarter_pow_exact(rho, 2 * n * (n + 1) - q);
    const auto om_pow = quarter_pow_exact(one_minus(alpha), -q);
    if (!rho_pow || !om_pow)
        throw IrrationalPrefactorError(
            "z_pentagon: the prefactor involves an irrational radical; "
            "use the floating-point route with an explicit precision");
    return *rho_pow * *om_pow * tdefp_det(spec, alpha);
}

BigFloat z_pentagon_float(const PentagonSpec& spec, const Rational& rho, const Rational& alpha,
                          mpfr_prec_t precision) {
    check_alpha_open_unit(alpha);
    if (rho.sign() <= 0) throw std::domain_error("z_pentagon: rho must be positive");
    const long n = spec.n();
    const long q = static_cast<long>(spec.s) * (spec.s + 1);
    BigFloat pref = BigFloat::from(rho, precision).pow(Rational(Integer(2 * n * (n + 1) - q), Integer(4)));
    pref *= BigFloat::from(one_minus(alpha), precision).pow(Rational(Integer(-q), Integer(4)));
    BigFloat t = spec.s <= 24 ? BigFloat::from(tdefp_det(spec, alpha), precision)
                              : tdefp_float(spec, BigFloat::from(alpha, precision), precision);
    return pref * t;
}

namespace {

struct SubsetSum {
    int upper, s;
    Rational beta;
    Rational total;
    std::vector<int> h;

    void descend(int j, int lo) {
        if (j == s) {
            add_term();
            return;
        }
        for (int v = lo; v <= upper - (s - 1 - j); ++v) {
            h[static_cast<std::size_t>(j)] = v;
            descend(j + 1, v + 1);
        }
    }

    void add_term() {
        unsigned long esum = 0;
        for (int v : h) esum += static_cast<unsigned long>(v);
        Integer vdm(1);
        for (int j = 0; j < s; ++j)
            for (int k = j + 1; k < s; ++k) vdm *= h[k] - h[j];
        total += beta.pow(esum) * Rational(vdm);
    }
};

}  // namespace

Rational symmetrized_loggas(const PentagonSpec& spec, const Rational& alpha,
                            std::uint64_t term_cap) {
    check_alpha_open_unit(alpha);
    const int s = spec.s;
    if (s == 0) return Rational(1);
    const auto beta = alpha.sqrt_exact();
    if (!beta)
        throw IrrationalPrefactorError(
            "symmetrized_loggas: needs sqrt(alpha) rational; pass a perfect-square alpha");
    const int upper = 2 * spec.r + s - 2;
    if (upper < s) return Rational();
    const Integer count = binomial_big(static_cast<unsigned long>(upper), s);
    if (count > Integer(static_cast<unsigned long>(term_cap)))
        throw TermCapError("symmetrized_loggas: " + count.get_str() + " terms exceed the cap");
    SubsetSum ss{upper, s, *beta, Rational(), std::vector<int>(static_cast<std::size_t>(s))};
    ss.descend(0, 1);
    return Rational(factorial_big(static_cast<unsigned long>(s))) * ss.total;
}

BigFloat kappa_estimate(const PentagonSpec& spec, const Rational& alpha, mpfr_prec_t precision) {
    const Rational g = g_rs(spec, alpha);
    const Rational sym = symmetrized_loggas(spec, alpha);
    if (sym.is_zero()) throw std::domain_error("kappa_estimate: symmetrized sum vanished");
    return BigFloat::from(g / sym, precision);
}

namespace {

// Entry P_{l}^{(m,m)}(alpha), m >= 1, evaluated directly in floating
// arithmetic: Horner over the integer coefficients C(m+i-1, i) C(m+K-i-1, K-i).
BigFloat residue_entry_float(long l, long m, const BigFloat& alpha, mpfr_prec_t prec) {
    const long top = l - 2 * m + 1;
    BigFloat acc(prec);
    if (top < 0) return acc;
    for (long i = top; i >= 0; --i) {
        const Integer c = binomial_big(static_cast<unsigned long>(m + i - 1), i) *
                          binomial_big(static_cast<unsigned long>(m + (top - i) - 1), top - i);
        acc = acc * alpha + BigFloat::from(c, prec);
    }
    return acc;
}

}  // namespace

BigFloat tdefp_float(const PentagonSpec& spec, const BigFloat& alpha, mpfr_prec_t precision) {
    if (alpha.sign() <= 0 || alpha >= BigFloat::from(1L, precision))
        throw std::domain_error("tdefp_float: alpha must lie in (0, 1)");
    const int s = spec.s;
    if (s == 0) return BigFloat::from(1L, precision);

    FloatMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s),
                  BigFloat(precision));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k)
            m(j - 1, k - 1) = residue_entry_float(spec.r + j + k - 2, j, alpha, precision);
    const BigFloat det = det_float(m, precision);
    const BigFloat om = BigFloat::from(1L, precision) - alpha;
    return om.pow_ui(static_cast<unsigned long>(s) * (s + 1) / 2) * det;
}

}  // namespace pentatile
