#pragma once

#include "modepoly/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace modepoly {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    // Matrix whose j-th column is columns[j]; all columns must have equal length.
    static RatMatrix from_columns(std::span<const RationalVector> columns);
    static RatMatrix from_rows(std::span<const RationalVector> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    RationalVector multiply(std::span<const Rational> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Gaussian elimination on exact rationals; the pivot is the first nonzero
// entry of the column. Throws DimensionMismatch for non-square input.
Rational determinant(const RatMatrix& m);

// Unique solution of m x = b. Throws DimensionMismatch on shape errors and
// SingularMatrix when m has no inverse.
RationalVector solve(const RatMatrix& m, std::span<const Rational> b);

std::size_t rank(const RatMatrix& m);

// Dimension of the affine hull of the points. Throws InvalidInput on empty or
// ragged input.
std::size_t affine_rank(std::span<const RationalVector> points);

// |det| of the matrix with the points as columns, which equals
// vol(conv(points)) / vol(simplex) for points of the standard simplex.
// Requires exactly as many points as coordinates, each a probability vector.
Rational simplex_volume_ratio(std::span<const RationalVector> points);

} // namespace modepoly
