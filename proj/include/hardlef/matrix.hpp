#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hardlef/errors.hpp"
#include "hardlef/rational.hpp"

namespace hardlef {

using QVector = std::vector<Rational>;

/// Dense matrix over the exact rationals, row major. Sizes in this project
/// stay tiny (at most a few dozen rows), so no sparsity tricks are needed;
/// what matters is exactness and a pinned, deterministic pivot order.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    QVector row(std::size_t r) const {
        QVector v(cols_);
        for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
        return v;
    }

    QVector col(std::size_t c) const {
        QVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Stack rows of two matrices with equal column count.
    static QMatrix vstack(const QMatrix& top, const QMatrix& bottom) {
        internal_check(top.cols() == bottom.cols() || top.rows() == 0 || bottom.rows() == 0,
                       "vstack: column mismatch");
        std::size_t cols = top.rows() ? top.cols() : bottom.cols();
        QMatrix m(top.rows() + bottom.rows(), cols);
        for (std::size_t r = 0; r < top.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = top(r, c);
        for (std::size_t r = 0; r < bottom.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m(top.rows() + r, c) = bottom(r, c);
        return m;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    internal_check(x.cols() == y.rows(), "matrix product: shape mismatch");
    QMatrix z(x.rows(), y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(r, k) == 0) continue;
            for (std::size_t c = 0; c < y.cols(); ++c) z(r, c) += x(r, k) * y(k, c);
        }
    return z;
}

inline QVector operator*(const QMatrix& m, const QVector& v) {
    internal_check(m.cols() == v.size(), "matrix-vector product: shape mismatch");
    QVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

struct Echelon {
    QMatrix r;                        ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column per pivot row, increasing
};

/// Reduced row echelon form with the pinned pivot rule: scan columns left to
/// right, take the first remaining row (smallest index) with a nonzero entry.
/// Fully reduced (pivots 1, zeros above and below), hence canonical for the
/// row space: equal row spaces give byte-identical echelon rows.
inline Echelon rref(QMatrix m) {
    Echelon e;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(pr, k));
        const Rational inv = m(pr, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(pr, k) /= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m(r, c) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(pr, k);
        }
        e.pivots.push_back(c);
        ++pr;
    }
    e.r = std::move(m);
    return e;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

/// Determinant by exact Gaussian elimination with row swaps.
inline Rational det(const QMatrix& m) {
    internal_check(m.rows() == m.cols(), "det: non-square matrix");
    QMatrix w = m;
    Rational d = 1;
    const std::size_t n = w.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && w(sel, c) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(w(sel, k), w(c, k));
            d = -d;
        }
        d *= w(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (w(r, c) == 0) continue;
            const Rational f = w(r, c) / w(c, c);
            for (std::size_t k = c; k < n; ++k) w(r, k) -= f * w(c, k);
        }
    }
    return d;
}

/// One solution of m x = rhs, or nullopt when rhs is outside the column
/// space. Deterministic: free variables are set to zero, so the result is a
/// function of (m, rhs) alone.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& rhs) {
    internal_check(m.rows() == rhs.size(), "solve: rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    Echelon e = rref(std::move(aug));
    for (std::size_t p : e.pivots)
        if (p == m.cols()) return std::nullopt;
    QVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.r(r, m.cols());
    return x;
}

}  // namespace hardlef
