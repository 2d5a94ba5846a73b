#pragma once

#include <optional>
#include <vector>

#include "hardlef/form.hpp"

namespace hardlef {

/// Matrix of the Chevalley differential from degree k to degree k+1 in the
/// lexicographic monomial bases (columns indexed by degree-k monomials).
inline QMatrix d_matrix(const LieAlgebra& L, int k) {
    if (k < 0 || k > L.dim()) throw InputError("d_matrix: degree out of range");
    const auto mons = degree_monomials(L.dim(), k);
    QMatrix m(monomial_count(L.dim(), k + 1), mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c) {
        InvariantForm img = ce_d(L, InvariantForm::monomial(L.dim(), mons[c]));
        for (const auto& [idx, coeff] : img.terms()) m(monomial_index(L.dim(), idx), c) = coeff;
    }
    return m;
}

/// H^k with a deterministic transversal: representatives are the canonical
/// cocycle basis rows that extend the coboundaries, in monomial order.
class CohomologySpace {
  public:
    CohomologySpace(const LieAlgebra& L, int k)
        : degree_(k),
          n_(L.dim()),
          dk_(d_matrix(L, k)),
          cocycles_(kernel_basis(dk_)),
          coboundaries_(k == 0 ? Subspace(monomial_count(L.dim(), 0))
                               : column_space(d_matrix(L, k - 1))),
          quotient_(cocycles_, coboundaries_) {
        internal_check(sum(cocycles_, coboundaries_) == cocycles_,
                       "cohomology: coboundaries escape the cocycles");
    }

    int degree() const { return degree_; }
    std::size_t dim() const { return quotient_.dim(); }
    const Subspace& cocycles() const { return cocycles_; }
    const Subspace& coboundaries() const { return coboundaries_; }

    std::vector<InvariantForm> representatives() const {
        std::vector<InvariantForm> out;
        for (const QVector& r : quotient_.representatives())
            out.push_back(form_from_coords(n_, degree_, r));
        return out;
    }

    bool is_closed(const InvariantForm& f) const {
        QVector img = dk_ * form_coords(f);
        for (const Rational& x : img)
            if (x != 0) return false;
        return true;
    }

    /// Coordinates of the class of a cocycle against the representatives.
    QVector class_coords(const InvariantForm& f) const {
        if (f.degree() != degree_ || f.n() != n_)
            throw InputError("class coordinates: form has the wrong shape");
        if (!is_closed(f)) throw InputError("class coordinates: form is not closed");
        return quotient_.coords(form_coords(f));
    }

  private:
    int degree_, n_;
    QMatrix dk_;
    Subspace cocycles_;
    Subspace coboundaries_;
    QuotientMap quotient_;
};

inline CohomologySpace cohomology(const LieAlgebra& L, int k) { return CohomologySpace(L, k); }

/// Deterministic primitive when f is exact: the free variables of the solve
/// are pinned to zero, so the answer depends only on (L, f). Requires f
/// closed; nullopt when the class is nonzero.
inline std::optional<InvariantForm> is_exact(const LieAlgebra& L, const InvariantForm& f) {
    const int k = f.degree();
    QVector img = d_matrix(L, k) * form_coords(f);
    for (const Rational& x : img)
        if (x != 0) throw InputError("exactness test: form is not closed");
    if (k == 0) {
        if (f.is_zero()) return InvariantForm(L.dim(), 0);
        return std::nullopt;
    }
    auto x = solve(d_matrix(L, k - 1), form_coords(f));
    if (!x) return std::nullopt;
    return form_from_coords(L.dim(), k - 1, *x);
}

inline std::vector<std::size_t> betti_vector(const LieAlgebra& L) {
    std::vector<std::size_t> b;
    for (int k = 0; k <= L.dim(); ++k) b.push_back(cohomology(L, k).dim());
    return b;
}

struct ParityRow {
    int p = 0;
    std::size_t b = 0;
    bool required_even = false;  ///< p odd and p <= n for ambient dim 2n+1
    bool satisfied = true;
};

struct ParityReport {
    int n = 0;  ///< ambient dimension 2n+1
    std::vector<ParityRow> rows;
    bool obstruction = false;
};

/// Evenness test for odd-degree Betti numbers up to the middle: a compact
/// Sasakian manifold of dimension 2n+1 has b_p even for every odd p <= n.
/// An odd value there is recorded as a Sasakian obstruction.
inline ParityReport parity_report(const LieAlgebra& L) {
    if (L.dim() % 2 == 0) throw InputError("parity report: algebra dimension must be odd");
    ParityReport rep;
    rep.n = (L.dim() - 1) / 2;
    const auto b = betti_vector(L);
    for (int p = 0; p <= L.dim(); ++p) {
        ParityRow row;
        row.p = p;
        row.b = b[p];
        row.required_even = (p % 2 == 1) && p <= rep.n;
        row.satisfied = !row.required_even || row.b % 2 == 0;
        if (!row.satisfied) rep.obstruction = true;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hardlef
