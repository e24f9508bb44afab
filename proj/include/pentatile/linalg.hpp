#pragma once

#include <cstddef>
#include <vector>

#include "pentatile/bigfloat.hpp"
#include "pentatile/rational.hpp"

namespace pentatile {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& init)
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<BigFloat>;

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. det of the 0x0 matrix is 1.
Rational det_exact(const RationalMatrix& m);

// Determinant via elimination with partial pivoting at the given precision,
// with a running first-order rounding-error bound. Throws
// LossOfSignificanceError when the estimated relative error of the result
// exceeds 2^-32.
BigFloat det_float(const FloatMatrix& m, mpfr_prec_t precision);

// det_float plus the error bound it computed (for diagnostics and tests).
struct DetFloatResult {
    BigFloat value;
    double rel_err_bound;  // first-order estimate; infinity when a pivot drowned
};
DetFloatResult det_float_with_error(const FloatMatrix& m, mpfr_prec_t precision);

}  // namespace pentatile
