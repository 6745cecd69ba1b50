#include "modepoly/linalg.hpp"

#include "modepoly/error.hpp"

#include <algorithm>
#include <string>

namespace modepoly {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RationalVector> columns) {
    if (columns.empty()) return {};
    const std::size_t rows = columns.front().size();
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("ragged column list");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RationalVector> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RationalVector RatMatrix::multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * x[j];
    return out;
}

namespace {

// Row-reduces m in place to echelon form; returns the pivot columns and the
// number of row swaps.
struct Echelon {
    std::vector<std::size_t> pivots;
    std::size_t swaps = 0;
};

Echelon eliminate(RatMatrix& m, std::size_t col_limit) {
    Echelon e;
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            m.swap_rows(pivot, row);
            ++e.swaps;
        }
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (sgn(m(r, col)) == 0) continue;
            factor = m(r, col) / m(row, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (sgn(m(row, j)) != 0) m(r, j) -= factor * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

Rational determinant(const RatMatrix& m) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    RatMatrix work = m;
    Echelon e = eliminate(work, work.cols());
    if (e.pivots.size() < work.rows()) return 0;
    Rational det = 1;
    for (std::size_t i = 0; i < work.rows(); ++i) det *= work(i, i);
    return e.swaps % 2 ? Rational(-det) : det;
}

RationalVector solve(const RatMatrix& m, std::span<const Rational> b) {
    if (!m.square()) throw DimensionMismatch("solve needs a square matrix");
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    Echelon e = eliminate(aug, n);
    if (e.pivots.size() < n) throw SingularMatrix("matrix is singular");
    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum = aug(i, n);
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(aug(i, j)) != 0) sum -= aug(i, j) * x[j];
        x[i] = sum / aug(i, i);
    }
    return x;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return eliminate(work, work.cols()).pivots.size();
}

std::size_t affine_rank(std::span<const RationalVector> points) {
    if (points.empty()) throw InvalidInput("affine rank of an empty point set");
    const auto& base = points.front();
    std::vector<RationalVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != base.size()) throw InvalidInput("points of different lengths");
        RationalVector d(base.size());
        for (std::size_t j = 0; j < base.size(); ++j) d[j] = points[i][j] - base[j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank(RatMatrix::from_rows(diffs));
}

Rational simplex_volume_ratio(std::span<const RationalVector> points) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidInput("no points");
    for (const auto& p : points) {
        if (p.size() != n)
            throw InvalidInput("need exactly as many points as coordinates (" + std::to_string(n) +
                               " points of length " + std::to_string(p.size()) + ")");
        Rational sum = 0;
        for (const auto& v : p) {
            if (sgn(v) < 0) throw InvalidInput("point has a negative coordinate");
            sum += v;
        }
        if (sum != 1) throw InvalidInput("point coordinates do not sum to 1");
    }
    return abs(determinant(RatMatrix::from_columns(points)));
}

} // namespace modepoly
