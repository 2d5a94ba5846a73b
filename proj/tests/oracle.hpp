#pragma once

// Shared helpers for the test suite: hand-frozen algebra data, an
// independent minor-expansion rank oracle (no code shared with the rref
// path it cross-checks), and deterministic generators for the randomized
// property checks.

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "hardlef/hardlef.hpp"

namespace testutil {

using hardlef::BracketTable;
using hardlef::InvariantForm;
using hardlef::LieAlgebra;
using hardlef::QMatrix;
using hardlef::QVector;
using hardlef::Rational;

// ---------------------------------------------------------------------
// Frozen algebras. Bracket tables are transcribed by hand here, on
// purpose: the catalog is tested against these, not the other way round.

inline BracketTable brackets(int dim, std::vector<std::array<int, 4>> list) {
    // entries are 1-based {i, j, k, c} meaning [X_i, X_j] = c X_k
    BracketTable b;
    for (const auto& [i, j, k, c] : list) {
        auto& v = b[{i - 1, j - 1}];
        if (v.empty()) v.assign(dim, 0);
        v[k - 1] += c;
    }
    return b;
}

inline LieAlgebra ex5d() {
    return LieAlgebra(5, {},
                      brackets(5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, -1}, {2, 3, 5, -1}}),
                      std::vector<int>{1, 2, 3, 4, 5});
}

inline LieAlgebra ex7d() {
    return LieAlgebra(
        7, {},
        brackets(7, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 7, 1}, {2, 3, 7, 1}, {5, 6, 7, 1}}),
        std::vector<int>{1, 2, 3, 4, 1, 4, 5});
}

inline LieAlgebra h3() {
    return LieAlgebra(3, {}, brackets(3, {{1, 2, 3, 1}}), std::vector<int>{1, 1, 2});
}

inline LieAlgebra h5() {
    return LieAlgebra(5, {}, brackets(5, {{1, 2, 5, 1}, {3, 4, 5, 1}}),
                      std::vector<int>{1, 1, 1, 1, 2});
}

inline LieAlgebra h7() {
    return LieAlgebra(7, {}, brackets(7, {{1, 2, 7, 1}, {3, 4, 7, 1}, {5, 6, 7, 1}}),
                      std::vector<int>{1, 1, 1, 1, 1, 1, 2});
}

inline std::vector<LieAlgebra> all_frozen() { return {h3(), h5(), h7(), ex5d(), ex7d()}; }

// contact form of each frozen algebra: the last basis covector
inline InvariantForm top_covector(const LieAlgebra& L) {
    return InvariantForm::basis_one_form(L.dim(), L.dim() - 1);
}

// 1-based basis covector and monomial shorthands
inline InvariantForm alpha(int n, int i) { return InvariantForm::basis_one_form(n, i - 1); }

inline InvariantForm mono(int n, std::vector<int> idx, const Rational& c = 1) {
    for (int& i : idx) --i;
    return InvariantForm::monomial(n, std::move(idx), c);
}

inline QVector basis_vector(int n, int i) {
    QVector v(n);
    v[i - 1] = 1;
    return v;
}

inline QMatrix imat(const std::vector<std::vector<int>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    return m;
}

/// Standard tensor pair (phi, identity metric) for each frozen algebra,
/// with phi transcribed by hand from the compatible almost contact
/// structure on each example.
inline hardlef::MetricStructure standard_structure(const std::string& which) {
    using hardlef::MetricStructure;
    if (which == "h3")
        return {imat({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), QMatrix::identity(3)};
    if (which == "h5")
        return {imat({{0, -1, 0, 0, 0},
                      {1, 0, 0, 0, 0},
                      {0, 0, 0, -1, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0}}),
                QMatrix::identity(5)};
    if (which == "h7")
        return {imat({{0, -1, 0, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0, 0},
                      {0, 0, 0, -1, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, -1, 0},
                      {0, 0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0}}),
                QMatrix::identity(7)};
    if (which == "ex5d")
        // phi X1 = -X4, phi X2 = -X3, phi X3 = X2, phi X4 = X1, phi X5 = 0
        return {imat({{0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 0},
                      {0, -1, 0, 0, 0},
                      {-1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0}}),
                QMatrix::identity(5)};
    if (which == "ex7d")
        // phi X1 = X4, phi X2 = X3, phi X3 = -X2, phi X4 = -X1,
        // phi X5 = X6, phi X6 = -X5, phi X7 = 0
        return {imat({{0, 0, 0, -1, 0, 0, 0},
                      {0, 0, -1, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, -1, 0},
                      {0, 0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0}}),
                QMatrix::identity(7)};
    throw hardlef::InternalError("unknown structure tag in test helper");
}

// ---------------------------------------------------------------------
// Independent rank oracle: Laplace expansion plus exhaustive minors.

inline Rational laplace_det(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational total = 0;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) != 0) {
            QMatrix sub(n - 1, n - 1);
            for (std::size_t r = 1; r < n; ++r) {
                std::size_t cc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c) sub(r - 1, cc++) = m(r, k);
            }
            total += Rational(sign) * m(0, c) * laplace_det(sub);
        }
        sign = -sign;
    }
    return total;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t t = k;
    while (t > 0 && c[t - 1] == n - k + t - 1) --t;
    if (t == 0) return false;
    ++c[t - 1];
    for (std::size_t s = t; s < k; ++s) c[s] = c[s - 1] + 1;
    return true;
}

/// Rank as the size of the largest square submatrix with nonzero
/// determinant. Exponential, but the randomized matrices stay tiny.
inline std::size_t minor_rank(const QMatrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k >= 1; --k) {
        std::vector<std::size_t> rs(k);
        for (std::size_t i = 0; i < k; ++i) rs[i] = i;
        do {
            std::vector<std::size_t> cs(k);
            for (std::size_t i = 0; i < k; ++i) cs[i] = i;
            do {
                QMatrix sub(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(rs[r], cs[c]);
                if (laplace_det(sub) != 0) return k;
            } while (next_combination(cs, m.cols()));
        } while (next_combination(rs, m.rows()));
    }
    return 0;
}

// ---------------------------------------------------------------------
// Deterministic randomized data (fixed seeds live in the test cases).

inline Rational rand_rational(std::mt19937& g, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(g), den(g));
}

inline QMatrix rand_matrix(std::mt19937& g, std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_rational(g);
    return m;
}

inline QVector rand_vector(std::mt19937& g, std::size_t n) {
    QVector v(n);
    for (Rational& x : v) x = rand_rational(g);
    return v;
}

inline InvariantForm rand_form(std::mt19937& g, int n, int k) {
    InvariantForm f(n, k);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& idx : hardlef::degree_monomials(n, k)) {
        int x = c(g);
        if (x != 0) f.add_term(idx, x);
    }
    return f;
}

/// Exact symmetric positive definite matrix: A^T A + I.
inline QMatrix rand_spd(std::mt19937& g, std::size_t n) {
    const QMatrix a = rand_matrix(g, n, n);
    QMatrix s = a.transposed() * a;
    for (std::size_t i = 0; i < n; ++i) s(i, i) += 1;
    return s;
}

inline bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace testutil
