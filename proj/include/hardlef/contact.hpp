#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardlef/cohomology.hpp"

namespace hardlef {

struct ContactCheck {
    bool contact = false;
    InvariantForm volume;  ///< eta ^ (d eta)^n, possibly zero
    ContactCheck() : volume(1, 0) {}
    ContactCheck(bool c, InvariantForm v) : contact(c), volume(std::move(v)) {}
};

inline int contact_n(const LieAlgebra& L) {
    if (L.dim() % 2 == 0) throw InputError("contact geometry needs odd dimension 2n+1");
    return (L.dim() - 1) / 2;
}

/// eta is contact iff the top form eta ^ (d eta)^n is nonzero.
inline ContactCheck is_contact(const LieAlgebra& L, const InvariantForm& eta) {
    if (eta.degree() != 1 || eta.n() != L.dim())
        throw InputError("contact test: eta must be a one-form on the algebra");
    const int n = contact_n(L);
    InvariantForm vol = wedge(eta, wedge_power(ce_d(L, eta), n));
    return {!vol.is_zero(), vol};
}

/// The Reeb vector: i_xi eta = 1 and i_xi d eta = 0. Uniqueness is part of
/// the contract; a degenerate system is reported as an input error.
inline QVector reeb(const LieAlgebra& L, const InvariantForm& eta) {
    auto check = is_contact(L, eta);
    if (!check.contact) throw InputError("Reeb vector: eta is not contact");
    const int dim = L.dim();
    const InvariantForm deta = ce_d(L, eta);
    // rows: one for eta, dim for the coefficients of i_xi (d eta)
    QMatrix m(1 + dim, dim);
    QVector rhs(1 + dim);
    rhs[0] = 1;
    for (int j = 0; j < dim; ++j) {
        QVector e(dim);
        e[j] = 1;
        m(0, j) = interior(e, eta).coeff({});
        InvariantForm ij = interior(e, deta);
        for (int r = 0; r < dim; ++r) m(1 + r, j) = ij.coeff({r});
    }
    if (kernel_basis(m).dim() != 0)
        throw InputError("Reeb vector: defining system is degenerate");
    auto x = solve(m, rhs);
    if (!x) throw InputError("Reeb vector: defining system is inconsistent");
    return *x;
}

/// Candidate metric structure (phi, g) in basis coordinates: column j of phi
/// holds the coefficients of phi(X_j); g is the Gram matrix.
struct MetricStructure {
    QMatrix phi;
    QMatrix metric;
};

/// Exact Sylvester criterion on the leading principal minors.
inline bool is_positive_definite(const QMatrix& g) {
    if (g.rows() != g.cols()) return false;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            if (g(r, c) != g(c, r)) return false;
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        QMatrix lead(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) lead(r, c) = g(r, c);
        if (det(lead) <= 0) return false;
    }
    return true;
}

struct AxiomResult {
    std::string id;    ///< "a".."e" plus a short description
    bool pass = true;
    std::optional<std::pair<int, int>> counterexample;  ///< 0-based basis pair
    std::string detail;
};

struct ContactMetricReport {
    bool all_pass = false;
    QVector xi;
    std::vector<AxiomResult> axioms;
};

/// Contact metric axioms for (eta, phi, g) with Reeb vector xi:
///   (a) eta(X) = g(X, xi)
///   (b) d eta(X, Y) = g(X, phi Y)
///   (c) phi^2 = -I + eta (x) xi
///   (d) the fundamental 2-form g(., phi .) is antisymmetric
///   (e) derived: phi xi = 0, eta o phi = 0,
///       g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)
/// Each failure reports the first offending basis pair.
inline ContactMetricReport verify_contact_metric(const LieAlgebra& L, const InvariantForm& eta,
                                                 const MetricStructure& ms) {
    const std::size_t dim = static_cast<std::size_t>(L.dim());
    if (ms.phi.rows() != dim || ms.phi.cols() != dim || ms.metric.rows() != dim ||
        ms.metric.cols() != dim)
        throw InputError("contact metric: phi and g must be dim x dim");
    if (!is_positive_definite(ms.metric))
        throw InputError("contact metric: g is not symmetric positive definite");
    ContactMetricReport rep;
    rep.xi = reeb(L, eta);
    const InvariantForm deta = ce_d(L, eta);
    const QMatrix& g = ms.metric;
    const QMatrix& phi = ms.phi;

    QVector eta_c(dim);
    for (std::size_t i = 0; i < dim; ++i) eta_c[i] = eta.coeff({static_cast<int>(i)});
    const QVector g_xi = g * rep.xi;

    auto push = [&rep](AxiomResult r) {
        if (!r.pass) rep.all_pass = false;
        rep.axioms.push_back(std::move(r));
    };
    rep.all_pass = true;

    {
        AxiomResult r{"a: eta(X) = g(X, xi)", true, std::nullopt, ""};
        for (std::size_t i = 0; i < dim && r.pass; ++i)
            if (eta_c[i] != g_xi[i]) {
                r.pass = false;
                r.counterexample = {static_cast<int>(i), static_cast<int>(i)};
                r.detail = "eta(X" + std::to_string(i + 1) + ") = " + to_string(eta_c[i]) +
                           " but g(X" + std::to_string(i + 1) + ", xi) = " + to_string(g_xi[i]);
            }
        push(std::move(r));
    }
    {
        AxiomResult r{"b: d eta(X, Y) = g(X, phi Y)", true, std::nullopt, ""};
        const QMatrix gphi = g * phi;
        for (std::size_t i = 0; i < dim && r.pass; ++i)
            for (std::size_t j = 0; j < dim && r.pass; ++j) {
                const Rational lhs = deta.coeff({static_cast<int>(i), static_cast<int>(j)}) *
                                     (i < j ? 1 : (i == j ? 0 : -1));
                if (lhs != gphi(i, j)) {
                    r.pass = false;
                    r.counterexample = {static_cast<int>(i), static_cast<int>(j)};
                    r.detail = "d eta(X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                               ") = " + to_string(lhs) + " but g(X" + std::to_string(i + 1) +
                               ", phi X" + std::to_string(j + 1) + ") = " + to_string(gphi(i, j));
                }
            }
        push(std::move(r));
    }
    {
        AxiomResult r{"c: phi^2 = -I + eta (x) xi", true, std::nullopt, ""};
        QMatrix want(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                want(i, j) = (i == j ? Rational(-1) : Rational(0)) + rep.xi[i] * eta_c[j];
        const QMatrix have = phi * phi;
        for (std::size_t i = 0; i < dim && r.pass; ++i)
            for (std::size_t j = 0; j < dim && r.pass; ++j)
                if (have(i, j) != want(i, j)) {
                    r.pass = false;
                    r.counterexample = {static_cast<int>(i), static_cast<int>(j)};
                    r.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               "): phi^2 = " + to_string(have(i, j)) + ", -I + eta(x)xi = " +
                               to_string(want(i, j));
                }
        push(std::move(r));
    }
    {
        AxiomResult r{"d: g(., phi .) antisymmetric", true, std::nullopt, ""};
        const QMatrix f = g * phi;
        for (std::size_t i = 0; i < dim && r.pass; ++i)
            for (std::size_t j = 0; j < dim && r.pass; ++j)
                if (f(i, j) + f(j, i) != 0) {
                    r.pass = false;
                    r.counterexample = {static_cast<int>(i), static_cast<int>(j)};
                    r.detail = "g(Xi, phi Xj) + g(Xj, phi Xi) = " + to_string(f(i, j) + f(j, i));
                }
        push(std::move(r));
    }
    {
        AxiomResult r{"e: phi xi = 0, eta o phi = 0, g(phi X, phi Y) = g - eta(x)eta", true,
                      std::nullopt, ""};
        const QVector phix = phi * rep.xi;
        for (std::size_t i = 0; i < dim && r.pass; ++i)
            if (phix[i] != 0) {
                r.pass = false;
                r.counterexample = {static_cast<int>(i), static_cast<int>(i)};
                r.detail = "phi xi has component " + to_string(phix[i]);
            }
        if (r.pass) {
            for (std::size_t j = 0; j < dim && r.pass; ++j) {
                Rational v = 0;
                for (std::size_t i = 0; i < dim; ++i) v += eta_c[i] * phi(i, j);
                if (v != 0) {
                    r.pass = false;
                    r.counterexample = {static_cast<int>(j), static_cast<int>(j)};
                    r.detail = "eta(phi X" + std::to_string(j + 1) + ") = " + to_string(v);
                }
            }
        }
        if (r.pass) {
            const QMatrix lhs = phi.transposed() * g * phi;
            for (std::size_t i = 0; i < dim && r.pass; ++i)
                for (std::size_t j = 0; j < dim && r.pass; ++j) {
                    const Rational want = g(i, j) - eta_c[i] * eta_c[j];
                    if (lhs(i, j) != want) {
                        r.pass = false;
                        r.counterexample = {static_cast<int>(i), static_cast<int>(j)};
                        r.detail = "g(phi Xi, phi Xj) = " + to_string(lhs(i, j)) +
                                   " but g - eta(x)eta = " + to_string(want);
                    }
                }
        }
        push(std::move(r));
    }
    return rep;
}

/// v is a Killing direction for g iff ad_v is g-skew.
inline bool is_killing(const LieAlgebra& L, const QMatrix& g, const QVector& v) {
    const QMatrix advm = L.ad(v);
    const QMatrix s = advm.transposed() * g;
    const QMatrix t = g * advm;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (s(i, j) + t(i, j) != 0) return false;
    return true;
}

struct NormalityEntry {
    int i, j;  ///< 0-based basis pair, i < j
    QVector value;
};

struct NormalityReport {
    bool zero = true;
    std::vector<NormalityEntry> table;  ///< all pairs i < j, in order
    std::optional<std::pair<int, int>> first_nonzero;
};

/// Normality tensor on basis pairs:
///   N(X,Y) = phi^2 [X,Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y]
///            + d eta(X, Y) xi.
/// Vanishing identically means the structure is Sasakian at the invariant
/// level.
inline NormalityReport normality_tensor(const LieAlgebra& L, const InvariantForm& eta,
                                        const MetricStructure& ms) {
    const int dim = L.dim();
    const QVector xi = reeb(L, eta);
    const InvariantForm deta = ce_d(L, eta);
    NormalityReport rep;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            QVector ei(dim), ej(dim);
            ei[i] = 1;
            ej[j] = 1;
            const QVector pi = ms.phi * ei;
            const QVector pj = ms.phi * ej;
            QVector val = ms.phi * (ms.phi * L.bracket(ei, ej));
            const QVector t2 = L.bracket(pi, pj);
            const QVector t3 = ms.phi * L.bracket(pi, ej);
            const QVector t4 = ms.phi * L.bracket(ei, pj);
            const Rational de = deta.coeff({i, j});
            bool nonzero = false;
            for (int c = 0; c < dim; ++c) {
                val[c] += t2[c] - t3[c] - t4[c] + de * xi[c];
                if (val[c] != 0) nonzero = true;
            }
            if (nonzero && rep.zero) {
                rep.zero = false;
                rep.first_nonzero = {i, j};
            }
            rep.table.push_back({i, j, std::move(val)});
        }
    return rep;
}

struct KContactReport {
    bool contact_metric = false;
    bool k_contact = false;
    bool invariant_sasakian = false;
    ContactMetricReport metric_report;
    NormalityReport normality;
};

inline KContactReport k_contact_report(const LieAlgebra& L, const InvariantForm& eta,
                                       const MetricStructure& ms) {
    KContactReport rep;
    rep.metric_report = verify_contact_metric(L, eta, ms);
    rep.contact_metric = rep.metric_report.all_pass;
    rep.k_contact = rep.contact_metric && is_killing(L, ms.metric, rep.metric_report.xi);
    rep.normality = normality_tensor(L, eta, ms);
    rep.invariant_sasakian = rep.k_contact && rep.normality.zero;
    return rep;
}

}  // namespace hardlef
