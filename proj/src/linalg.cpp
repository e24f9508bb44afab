#include "pentatile/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pentatile/errors.hpp"

namespace pentatile {

Rational det_exact(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("det_exact: matrix not square");
    if (n == 0) return Rational(1);

    // Clear denominators row by row; track the accumulated scale.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer d(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).numerator() * (d / m(i, j).denominator());
        scale *= d;
    }

    // Bareiss elimination: every division below is exact.
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    Integer det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

namespace {

// One entry of the working matrix: value plus a running absolute error bound.
struct Tracked {
    BigFloat v;
    double err;
};

double ulp(const BigFloat& x, mpfr_prec_t prec) {
    if (x.is_zero()) return 0.0;
    return std::abs(x.to_double()) * std::ldexp(1.0, 1 - static_cast<int>(prec));
}

}  // namespace

DetFloatResult det_float_with_error(const FloatMatrix& m, mpfr_prec_t precision) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("det_float: matrix not square");
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(precision, BigFloat::min_precision);
    if (n == 0) return {BigFloat::from(1L, prec), 0.0};

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<Tracked>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat v = m(i, j);
            if (!v.is_finite()) throw std::invalid_argument("det_float: non-finite entry");
            a[i].push_back({v, ulp(v, prec)});
        }
    }

    int sign = 1;
    BigFloat det = BigFloat::from(1L, prec);
    double rel_err = static_cast<double>(n) * std::ldexp(1.0, 1 - static_cast<int>(prec));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (a[i][k].v.abs() > a[p][k].v.abs()) p = i;
        if (p != k) {
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        const Tracked& pivot = a[k][k];
        const double pv = std::abs(pivot.v.to_double());
        if (pivot.v.is_zero() || pv <= pivot.err) {
            // Pivot indistinguishable from zero at this precision.
            return {BigFloat::from(0L, prec), inf};
        }
        rel_err += pivot.err / pv;
        det = det * pivot.v;

        for (std::size_t i = k + 1; i < n; ++i) {
            BigFloat f = a[i][k].v / pivot.v;
            const double fv = std::abs(f.to_double());
            const double f_err =
                (a[i][k].err + fv * pivot.err) / pv + fv * std::ldexp(1.0, 1 - static_cast<int>(prec));
            for (std::size_t j = k + 1; j < n; ++j) {
                BigFloat t = f * a[k][j].v;
                const double t_err = f_err * std::abs(a[k][j].v.to_double()) + fv * a[k][j].err +
                                     ulp(t, prec);
                a[i][j].v = a[i][j].v - t;
                a[i][j].err += t_err + ulp(a[i][j].v, prec);
            }
            a[i][k].v = BigFloat(prec);
            a[i][k].err = 0.0;
        }
    }

    if (sign < 0) det = -det;
    return {det, rel_err};
}

BigFloat det_float(const FloatMatrix& m, mpfr_prec_t precision) {
    DetFloatResult r = det_float_with_error(m, precision);
    if (!(r.rel_err_bound <= std::ldexp(1.0, -32)))
        throw LossOfSignificanceError("det_float: estimated relative error above 2^-32",
                                      r.rel_err_bound);
    return r.value;
}

}  // namespace pentatile
