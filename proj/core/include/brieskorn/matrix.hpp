#pragma once

#include "brieskorn/rational.hpp"

#include <cstddef>
#include <vector>

namespace brieskorn {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Exact determinant by Bareiss elimination with row pivoting.
Integer bareiss_determinant(const IntegerMatrix& a);

/// Leading principal minors D_1..D_n computed by pivot-free Bareiss.
/// Stops early (returning a shorter vector whose last entry is 0) when a
/// leading minor vanishes.
std::vector<Integer> leading_principal_minors(const IntegerMatrix& a);

/// Fraction-free Gauss-Jordan on [A | I]. On return `scaled_inverse` holds
/// `scale * A^{-1}` with integer entries, where |scale| = |det A|.
/// Throws DomainError for singular input.
struct ScaledInverse {
    IntegerMatrix scaled_inverse;
    Integer scale;
    Integer determinant;
};
ScaledInverse bareiss_inverse(const IntegerMatrix& a);

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
RationalMatrix multiply(const IntegerMatrix& a, const RationalMatrix& b);

} // namespace brieskorn
