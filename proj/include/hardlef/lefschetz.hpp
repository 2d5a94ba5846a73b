#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hardlef/contact.hpp"

namespace hardlef {

/// Admissible degree-p forms for the invariant Lefschetz relation:
/// closed, Reeb-horizontal, and killed by wedging with (d eta)^(n-p+1).
struct AdmissibleSpace {
    int p = 0;
    Subspace space;  ///< canonical subspace of the degree-p coordinate space
    AdmissibleSpace() : space(1) {}
};

inline AdmissibleSpace admissible_space(const LieAlgebra& L, const InvariantForm& eta, int p) {
    const int n = contact_n(L);
    if (p < 0 || p > n) throw InputError("admissible space: degree must lie in [0, n]");
    const QVector xi = reeb(L, eta);
    const InvariantForm deta = ce_d(L, eta);
    const InvariantForm power = wedge_power(deta, n - p + 1);
    const auto mons = degree_monomials(L.dim(), p);

    QMatrix closed = d_matrix(L, p);
    QMatrix horiz(p == 0 ? 0 : monomial_count(L.dim(), p - 1), mons.size());
    QMatrix lef(monomial_count(L.dim(), p + 2 * (n - p + 1)), mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c) {
        InvariantForm m = InvariantForm::monomial(L.dim(), mons[c]);
        if (p > 0) {
            InvariantForm h = interior(xi, m);
            for (const auto& [idx, coeff] : h.terms()) horiz(monomial_index(L.dim(), idx), c) = coeff;
        }
        InvariantForm w = wedge(power, m);
        for (const auto& [idx, coeff] : w.terms()) lef(monomial_index(L.dim(), idx), c) = coeff;
    }
    AdmissibleSpace out;
    out.p = p;
    out.space = kernel_basis(QMatrix::vstack(QMatrix::vstack(closed, horiz), lef));
    return out;
}

struct RelationGenerator {
    InvariantForm beta;   ///< admissible basis form
    InvariantForm omega;  ///< image eta ^ (d eta)^(n-p) ^ beta (times the scale)
    QVector pair;         ///< (class of beta | class of omega)
};

struct LefschetzRelationSpace {
    int p = 0;
    std::size_t bp = 0, bq = 0;
    Subspace relation;  ///< canonical span of the generator pairs in Q^(bp+bq)
    std::vector<RelationGenerator> generators;
    LefschetzRelationSpace() : relation(1) {}
};

/// The invariant Lefschetz relation in degree p. Every generator image is
/// asserted closed; a failure there would be an engine bug, not bad input.
/// The optional image_scale multiplies the image side only; verdicts must
/// be invariant under it (the half factor of the metric normalization).
inline LefschetzRelationSpace lefschetz_relation(const LieAlgebra& L, const InvariantForm& eta,
                                                 int p, const CohomologySpace& Hp,
                                                 const CohomologySpace& Hq,
                                                 const Rational& image_scale = 1) {
    const int n = contact_n(L);
    if (image_scale == 0) throw InputError("lefschetz relation: zero image scale");
    const AdmissibleSpace adm = admissible_space(L, eta, p);
    const InvariantForm factor = wedge(eta, wedge_power(ce_d(L, eta), n - p));

    LefschetzRelationSpace rel;
    rel.p = p;
    rel.bp = Hp.dim();
    rel.bq = Hq.dim();
    std::vector<QVector> pairs;
    for (const QVector& row : adm.space.basis()) {
        RelationGenerator gen{form_from_coords(L.dim(), p, row),
                              InvariantForm(L.dim(), 2 * n + 1 - p), {}};
        gen.omega = image_scale * wedge(factor, gen.beta);
        internal_check(ce_d(L, gen.omega).is_zero(),
                       "lefschetz relation: image of an admissible form is not closed");
        const QVector cb = Hp.class_coords(gen.beta);
        const QVector co = Hq.class_coords(gen.omega);
        QVector pair = cb;
        pair.insert(pair.end(), co.begin(), co.end());
        gen.pair = pair;
        pairs.push_back(std::move(pair));
        rel.generators.push_back(std::move(gen));
    }
    rel.relation = Subspace::span(rel.bp + rel.bq, pairs);
    return rel;
}

enum class Outcome { SOUND_FAIL, INVARIANT_PASS, INCONCLUSIVE };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::SOUND_FAIL: return "SOUND_FAIL";
        case Outcome::INVARIANT_PASS: return "INVARIANT_PASS";
        default: return "INCONCLUSIVE";
    }
}

/// A replayable failure witness. Both kinds are statements about genuine
/// invariant forms, so they transfer to the ambient manifold relation.
struct Witness {
    enum class Kind {
        NonInjective,   ///< beta has nonzero class, its image is exact: gamma with d gamma = omega
        Functionality,  ///< beta is exact (rho with d rho = beta), its image class is nonzero
    };
    Kind kind = Kind::NonInjective;
    InvariantForm beta, omega, primitive;
    Witness() : beta(1, 0), omega(1, 0), primitive(1, 0) {}
};

struct VerdictDiagnostics {
    std::size_t dim_admissible = 0;
    std::size_t dim_relation = 0;
    std::size_t dim_proj1 = 0, dim_proj2 = 0;
    std::size_t dim_kernel_side = 0;  ///< dim of R meet (H^p + 0)
    std::size_t dim_value_side = 0;   ///< dim of R meet (0 + H^q)
    bool operator==(const VerdictDiagnostics&) const = default;
};

struct LefschetzVerdict {
    int p = 0;
    Outcome outcome = Outcome::INCONCLUSIVE;
    VerdictDiagnostics diag;
    /// On SOUND_FAIL: all canonical witnesses, the designated one first
    /// (fewest monomials in beta, ties in monomial order, kind last).
    std::vector<Witness> witnesses;
};

namespace detail {

inline bool form_precedes(const InvariantForm& x, const InvariantForm& y) {
    if (x.terms().size() != y.terms().size()) return x.terms().size() < y.terms().size();
    auto xi = x.terms().begin();
    auto yi = y.terms().begin();
    for (; xi != x.terms().end() && yi != y.terms().end(); ++xi, ++yi) {
        if (xi->first != yi->first) return xi->first < yi->first;
        if (xi->second != yi->second) return xi->second < yi->second;
    }
    return false;
}

inline bool is_zero_vec(const QVector& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace detail

/// Decide the degree-p verdict from the relation subspace, with witnesses.
///
/// SOUND_FAIL: the relation relates some class to two different values
/// (equivalently meets 0 + H^q nontrivially) or relates a nonzero class to
/// zero (meets H^p + 0 nontrivially). Either property is inherited by the
/// full manifold relation, so this is a sound obstruction.
/// INVARIANT_PASS: the relation is the graph of an isomorphism between the
/// invariant cohomologies; this does NOT transfer to the manifold.
/// INCONCLUSIVE: anything else (the invariant relation is not total/onto).
inline LefschetzVerdict lefschetz_verdict(const LieAlgebra& L, const LefschetzRelationSpace& rel,
                                          const CohomologySpace& Hp, const CohomologySpace& Hq) {
    internal_check(rel.bp == Hp.dim() && rel.bq == Hq.dim(), "verdict: cohomology size mismatch");
    LefschetzVerdict v;
    v.p = rel.p;
    const std::size_t bp = rel.bp, bq = rel.bq;

    std::vector<QVector> first_block, second_block;
    for (std::size_t i = 0; i < bp; ++i) {
        QVector e(bp + bq);
        e[i] = 1;
        first_block.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < bq; ++i) {
        QVector e(bp + bq);
        e[bp + i] = 1;
        second_block.push_back(std::move(e));
    }
    const Subspace Hp0 = Subspace::span(bp + bq, first_block);
    const Subspace H0q = Subspace::span(bp + bq, second_block);

    std::vector<QVector> proj1_rows, proj2_rows;
    for (const QVector& r : rel.relation.basis()) {
        proj1_rows.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(bp));
        proj2_rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(bp), r.end());
    }
    v.diag.dim_admissible = rel.generators.size();
    v.diag.dim_relation = rel.relation.dim();
    v.diag.dim_proj1 = Subspace::span(bp, proj1_rows).dim();
    v.diag.dim_proj2 = Subspace::span(bq, proj2_rows).dim();
    v.diag.dim_kernel_side = intersect(rel.relation, Hp0).dim();
    v.diag.dim_value_side = intersect(rel.relation, H0q).dim();

    // class matrices over the generator coefficient space
    const std::size_t s = rel.generators.size();
    QMatrix Mbeta(bp, s), Momega(bq, s);
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t r = 0; r < bp + bq; ++r) {
            if (r < bp)
                Mbeta(r, c) = rel.generators[c].pair[r];
            else
                Momega(r - bp, c) = rel.generators[c].pair[r];
        }
    auto combine = [&](const QVector& u) {
        InvariantForm beta(L.dim(), rel.p);
        InvariantForm omega(L.dim(), static_cast<int>(L.dim()) - rel.p);
        for (std::size_t t = 0; t < s; ++t) {
            if (u[t] == 0) continue;
            beta += u[t] * rel.generators[t].beta;
            omega += u[t] * rel.generators[t].omega;
        }
        return std::make_pair(beta, omega);
    };

    const Subspace omega_kernel = kernel_basis(Momega);
    for (const QVector& u : omega_kernel.basis()) {
        if (detail::is_zero_vec(Mbeta * u)) continue;
        auto [beta, omega] = combine(u);
        Witness w;
        w.kind = Witness::Kind::NonInjective;
        w.beta = beta;
        w.omega = omega;
        auto prim = is_exact(L, omega);
        internal_check(prim.has_value(), "verdict: exact image lost its primitive");
        w.primitive = *prim;
        v.witnesses.push_back(std::move(w));
    }
    const Subspace beta_kernel = kernel_basis(Mbeta);
    for (const QVector& u : beta_kernel.basis()) {
        if (detail::is_zero_vec(Momega * u)) continue;
        auto [beta, omega] = combine(u);
        Witness w;
        w.kind = Witness::Kind::Functionality;
        w.beta = beta;
        w.omega = omega;
        auto prim = is_exact(L, beta);
        internal_check(prim.has_value(), "verdict: exact admissible form lost its primitive");
        w.primitive = *prim;
        v.witnesses.push_back(std::move(w));
    }
    std::stable_sort(v.witnesses.begin(), v.witnesses.end(), [](const Witness& a, const Witness& b) {
        if (a.kind != b.kind)
            return a.kind == Witness::Kind::NonInjective;  // report class failures first
        return detail::form_precedes(a.beta, b.beta);
    });

    const bool fail = v.diag.dim_kernel_side > 0 || v.diag.dim_value_side > 0;
    internal_check(fail == !v.witnesses.empty(), "verdict: witness set disagrees with diagnostics");
    if (fail)
        v.outcome = Outcome::SOUND_FAIL;
    else if (v.diag.dim_proj1 == bp && v.diag.dim_proj2 == bq)
        v.outcome = Outcome::INVARIANT_PASS;
    else
        v.outcome = Outcome::INCONCLUSIVE;
    return v;
}

/// Re-run every defining equation of a witness from scratch. Used both by
/// the emitter (before anything is written) and by certificate verification.
inline bool replay_witness(const LieAlgebra& L, const InvariantForm& eta, int p, const Witness& w,
                           const Rational& image_scale = 1) {
    try {
        const int n = contact_n(L);
        if (w.beta.degree() != p || w.omega.degree() != 2 * n + 1 - p) return false;
        // beta admissible
        if (!ce_d(L, w.beta).is_zero()) return false;
        if (!interior(reeb(L, eta), w.beta).is_zero()) return false;
        if (!wedge(wedge_power(ce_d(L, eta), n - p + 1), w.beta).is_zero()) return false;
        // omega really is the Lefschetz image of beta
        const InvariantForm image =
            image_scale * wedge(wedge(eta, wedge_power(ce_d(L, eta), n - p)), w.beta);
        if (!(image == w.omega)) return false;
        if (w.kind == Witness::Kind::NonInjective) {
            if (is_exact(L, w.beta).has_value()) return false;       // class of beta nonzero
            if (!(ce_d(L, w.primitive) == w.omega)) return false;    // d gamma = omega, exactly
        } else {
            if (!(ce_d(L, w.primitive) == w.beta)) return false;     // d rho = beta
            if (is_exact(L, w.omega).has_value()) return false;      // class of omega nonzero
        }
        return true;
    } catch (const InputError&) {
        return false;
    }
}

enum class OverallOutcome { NON_SASAKIAN_CERTIFIED, LEFSCHETZ_INVARIANT_PASS, INCONCLUSIVE };

inline std::string to_string(OverallOutcome o) {
    switch (o) {
        case OverallOutcome::NON_SASAKIAN_CERTIFIED: return "NON_SASAKIAN_CERTIFIED";
        case OverallOutcome::LEFSCHETZ_INVARIANT_PASS: return "LEFSCHETZ_INVARIANT_PASS";
        default: return "INCONCLUSIVE";
    }
}

struct HardLefschetzReport {
    std::vector<LefschetzVerdict> verdicts;  ///< degrees 0..n in order
    OverallOutcome overall = OverallOutcome::INCONCLUSIVE;
    int first_fail_p = -1;  ///< smallest failing degree, -1 when none
};

/// Verdicts for every degree 0 <= p <= n. Certified as soon as one degree
/// fails soundly; a full pass stays labelled invariant-only.
inline HardLefschetzReport hard_lefschetz_report(const LieAlgebra& L, const InvariantForm& eta,
                                                 const Rational& image_scale = 1) {
    const int n = contact_n(L);
    HardLefschetzReport rep;
    bool all_pass = true;
    for (int p = 0; p <= n; ++p) {
        const CohomologySpace Hp = cohomology(L, p);
        const CohomologySpace Hq = cohomology(L, L.dim() - p);
        const auto rel = lefschetz_relation(L, eta, p, Hp, Hq, image_scale);
        LefschetzVerdict v = lefschetz_verdict(L, rel, Hp, Hq);
        for (const Witness& w : v.witnesses)
            internal_check(replay_witness(L, eta, p, w, image_scale),
                           "hard lefschetz: emitted witness failed its replay");
        if (v.outcome == Outcome::SOUND_FAIL && rep.first_fail_p < 0) rep.first_fail_p = p;
        all_pass = all_pass && v.outcome == Outcome::INVARIANT_PASS;
        rep.verdicts.push_back(std::move(v));
    }
    if (rep.first_fail_p >= 0)
        rep.overall = OverallOutcome::NON_SASAKIAN_CERTIFIED;
    else if (all_pass)
        rep.overall = OverallOutcome::LEFSCHETZ_INVARIANT_PASS;
    else
        rep.overall = OverallOutcome::INCONCLUSIVE;
    return rep;
}

}  // namespace hardlef
