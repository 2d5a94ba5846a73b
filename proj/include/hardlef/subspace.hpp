#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hardlef/matrix.hpp"

namespace hardlef {

/// Linear subspace of Q^n held in canonical form: the rows of the reduced
/// row echelon basis. Two equal subspaces therefore compare equal
/// componentwise, which keeps every downstream report deterministic.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<QVector>& gens) {
        Subspace s(ambient);
        if (gens.empty()) return s;
        QMatrix m(gens.size(), ambient);
        for (std::size_t r = 0; r < gens.size(); ++r) {
            internal_check(gens[r].size() == ambient, "span: generator length mismatch");
            for (std::size_t c = 0; c < ambient; ++c) m(r, c) = gens[r][c];
        }
        s.adopt(rref(std::move(m)));
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        for (std::size_t i = 0; i < ambient; ++i) {
            QVector e(ambient);
            e[i] = 1;
            s.rows_.push_back(std::move(e));
        }
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<QVector>& basis() const { return rows_; }

    bool contains(const QVector& v) const {
        internal_check(v.size() == ambient_, "contains: vector length mismatch");
        QVector r = v;
        for (const QVector& b : rows_) {
            std::size_t lead = leading(b);
            if (r[lead] == 0) continue;
            const Rational f = r[lead];
            for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * b[c];
        }
        for (const Rational& x : r)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        internal_check(a.ambient_ == b.ambient_, "sum: ambient mismatch");
        std::vector<QVector> gens = a.rows_;
        gens.insert(gens.end(), b.rows_.begin(), b.rows_.end());
        return span(a.ambient_, gens);
    }

    /// Intersection via the kernel of [A^T | -B^T]: a kernel vector (u, w)
    /// encodes one vector u^T A = w^T B lying in both row spaces.
    friend Subspace intersect(const Subspace& a, const Subspace& b);

  private:
    void adopt(Echelon e) {
        rows_.clear();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) rows_.push_back(e.r.row(r));
    }

    static std::size_t leading(const QVector& b) {
        std::size_t c = 0;
        while (b[c] == 0) ++c;
        return c;
    }

    std::size_t ambient_;
    std::vector<QVector> rows_;
};

/// Kernel of m as a canonical subspace of Q^cols. A matrix with no rows
/// imposes no constraints.
inline Subspace kernel_basis(const QMatrix& m) {
    if (m.rows() == 0) return Subspace::full(m.cols());
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<QVector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.r(r, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

/// Column space of m as a canonical subspace of Q^rows.
inline Subspace column_space(const QMatrix& m) {
    std::vector<QVector> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) gens.push_back(m.col(c));
    return Subspace::span(m.rows(), gens);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    internal_check(a.ambient_ == b.ambient_, "intersect: ambient mismatch");
    const std::size_t ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace(a.ambient_);
    QMatrix m(a.ambient_, ka + kb);
    for (std::size_t c = 0; c < ka; ++c)
        for (std::size_t r = 0; r < a.ambient_; ++r) m(r, c) = a.rows_[c][r];
    for (std::size_t c = 0; c < kb; ++c)
        for (std::size_t r = 0; r < a.ambient_; ++r) m(r, ka + c) = -b.rows_[c][r];
    Subspace ker = kernel_basis(m);
    std::vector<QVector> gens;
    for (const QVector& uw : ker.basis()) {
        QVector v(a.ambient_);
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t c = 0; c < a.ambient_; ++c) v[c] += uw[i] * a.rows_[i][c];
        gens.push_back(std::move(v));
    }
    return Subspace::span(a.ambient_, gens);
}

/// Coordinates on a modulo b. Representatives are the canonical basis rows
/// of a that extend b to a basis of a+b, taken in order; the map kernel
/// restricted to a is exactly the intersection of a and b.
class QuotientMap {
  public:
    QuotientMap(const Subspace& a, const Subspace& b) : ambient_(a.ambient()) {
        internal_check(a.ambient() == b.ambient(), "quotient: ambient mismatch");
        std::vector<QVector> chosen = b.basis();
        Subspace spanned = b;
        for (const QVector& cand : a.basis()) {
            if (spanned.contains(cand)) continue;
            chosen.push_back(cand);
            reps_.push_back(cand);
            std::vector<QVector> gens = spanned.basis();
            gens.push_back(cand);
            spanned = Subspace::span(ambient_, gens);
        }
        base_dim_ = chosen.size() - reps_.size();
        solver_ = QMatrix(ambient_, chosen.size());
        for (std::size_t c = 0; c < chosen.size(); ++c)
            for (std::size_t r = 0; r < ambient_; ++r) solver_(r, c) = chosen[c][r];
    }

    std::size_t dim() const { return reps_.size(); }
    const std::vector<QVector>& representatives() const { return reps_; }

    /// Coordinates of v against the representatives; v must lie in a + b.
    QVector coords(const QVector& v) const {
        auto x = solve(solver_, v);
        if (!x) throw InputError("quotient coordinates: vector outside the source space");
        return QVector(x->begin() + static_cast<std::ptrdiff_t>(base_dim_), x->end());
    }

  private:
    std::size_t ambient_;
    std::size_t base_dim_ = 0;
    std::vector<QVector> reps_;
    QMatrix solver_;
};

}  // namespace hardlef
