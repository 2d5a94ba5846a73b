#pragma once

#include <map>
#include <string>
#include <vector>

#include "hardlef/lie_algebra.hpp"
#include "hardlef/polynomial.hpp"

namespace hardlef {

/// Differential form on a coordinate space R^m with polynomial coefficients.
/// Keys are strictly increasing 0-based coordinate index tuples; coefficient
/// polynomials live in the same m coordinates.
class PolyForm {
public:
    using Terms = std::map<std::vector<int>, Polynomial>;

    PolyForm(std::size_t m, int degree) : m_(m), degree_(degree) {
        internal_check(degree >= 0, "polyform: negative degree");
    }
    static PolyForm basis_one_form(std::size_t m, int k) {
        PolyForm f(m, 1);
        f.add_term({k}, Polynomial::constant(m, 1));
        return f;
    }

    std::size_t coords() const { return m_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Insert coeff * dx_{idx...}; idx may arrive unsorted and is reordered
    /// with the alternating sign, repeated indices annihilate the term.
    void add_term(std::vector<int> idx, Polynomial coeff) {
        internal_check(static_cast<int>(idx.size()) == degree_, "polyform: term degree mismatch");
        internal_check(coeff.nvars() == m_, "polyform: coefficient in wrong variable space");
        if (coeff.is_zero()) return;
        int sign = 1;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            int v = idx[i];
            std::size_t j = i;
            while (j > 0 && idx[j - 1] > v) {
                idx[j] = idx[j - 1];
                --j;
                sign = -sign;
            }
            idx[j] = v;
        }
        for (std::size_t i = 0; i < idx.size(); ++i) {
            internal_check(idx[i] >= 0 && idx[i] < static_cast<int>(m_),
                           "polyform: coordinate index out of range");
            if (i > 0 && idx[i] == idx[i - 1]) return;
        }
        if (sign < 0) coeff = -coeff;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(std::move(idx), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolyForm& operator+=(const PolyForm& o) {
        internal_check(m_ == o.m_ && degree_ == o.degree_, "polyform: shape mismatch in sum");
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(const PolyForm& a) {
        PolyForm r(a.m_, a.degree_);
        for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, -c);
        return r;
    }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a += -b; }
    friend PolyForm operator*(const Polynomial& c, const PolyForm& a) {
        PolyForm r(a.m_, a.degree_);
        for (const auto& [idx, k] : a.terms_) r.add_term(idx, c * k);
        return r;
    }
    friend PolyForm operator*(const Rational& c, const PolyForm& a) {
        return Polynomial::constant(a.m_, c) * a;
    }
    bool operator==(const PolyForm& o) const {
        return m_ == o.m_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    std::size_t m_;
    int degree_;
    Terms terms_;
};

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    internal_check(a.coords() == b.coords(), "polyform: wedge of forms on different spaces");
    PolyForm r(a.coords(), a.degree() + b.degree());
    if (a.degree() + b.degree() > static_cast<int>(a.coords())) return r;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

/// Exterior derivative: d(c dx_I) = sum_j dc/dx_j dx_j ^ dx_I.
inline PolyForm poly_d(const PolyForm& f) {
    PolyForm r(f.coords(), f.degree() + 1);
    if (f.degree() + 1 > static_cast<int>(f.coords())) return r;
    for (const auto& [idx, c] : f.terms())
        for (std::size_t j = 0; j < f.coords(); ++j) {
            Polynomial dc = c.derivative(j);
            if (dc.is_zero()) continue;
            std::vector<int> full{static_cast<int>(j)};
            full.insert(full.end(), idx.begin(), idx.end());
            r.add_term(std::move(full), std::move(dc));
        }
    return r;
}

/// Pullback along the polynomial map whose i-th component is components[i].
/// The result lives on the common domain of the components.
inline PolyForm pullback(const PolyForm& f, const std::vector<Polynomial>& components) {
    internal_check(components.size() == f.coords(), "polyform: pullback component count mismatch");
    const std::size_t target = components.empty() ? 0 : components[0].nvars();
    for (const Polynomial& c : components)
        internal_check(c.nvars() == target, "polyform: pullback components in mixed spaces");
    std::vector<PolyForm> dcomp;
    for (const Polynomial& c : components) {
        PolyForm dc(target, 1);
        for (std::size_t j = 0; j < target; ++j)
            dc.add_term({static_cast<int>(j)}, c.derivative(j));
        dcomp.push_back(std::move(dc));
    }
    PolyForm r(target, f.degree());
    for (const auto& [idx, c] : f.terms()) {
        PolyForm t(target, 0);
        t.add_term({}, c.compose(components));
        PolyForm w = t;
        for (std::size_t i = 0; i < idx.size(); ++i)
            w = wedge(w, dcomp[static_cast<std::size_t>(idx[i])]);
        r += w;
    }
    return r;
}

/// Restriction to a leaf {first `cutoff` coordinates constant}: terms that
/// touch any dx_i with i < cutoff vanish on such a leaf.
inline PolyForm leaf_restrict(const PolyForm& f, int cutoff) {
    PolyForm r(f.coords(), f.degree());
    for (const auto& [idx, c] : f.terms()) {
        bool keep = true;
        for (int i : idx)
            if (i < cutoff) {
                keep = false;
                break;
            }
        if (keep) r.add_term(idx, c);
    }
    return r;
}

/// Polynomial group law on R^m: component i of the product x * y, written
/// in the 2m variables x1..xm, y1..ym.
struct GroupLaw {
    std::size_t m = 0;
    std::vector<Polynomial> components;
};

inline GroupLaw make_group_law(std::size_t m, const std::vector<std::string>& exprs) {
    if (exprs.size() != m) throw InputError("group law: expected one component per coordinate");
    std::vector<std::string> names = coordinate_names(m, "x");
    const std::vector<std::string> ynames = coordinate_names(m, "y");
    names.insert(names.end(), ynames.begin(), ynames.end());
    GroupLaw gl;
    gl.m = m;
    for (const std::string& e : exprs) gl.components.push_back(parse_polynomial(e, names));
    return gl;
}

struct GroupLawReport {
    bool left_unit = false;
    bool right_unit = false;
    bool associative = false;
    bool ok() const { return left_unit && right_unit && associative; }
};

inline GroupLawReport verify_group_law(const GroupLaw& gl) {
    const std::size_t m = gl.m;
    GroupLawReport rep;

    std::vector<Polynomial> sub_left, sub_right;  // (0, y) and (x, 0)
    for (std::size_t i = 0; i < m; ++i) sub_left.push_back(Polynomial::constant(m, 0));
    for (std::size_t i = 0; i < m; ++i) sub_left.push_back(Polynomial::variable(m, i));
    for (std::size_t i = 0; i < m; ++i) sub_right.push_back(Polynomial::variable(m, i));
    for (std::size_t i = 0; i < m; ++i) sub_right.push_back(Polynomial::constant(m, 0));
    rep.left_unit = rep.right_unit = true;
    for (std::size_t i = 0; i < m; ++i) {
        const Polynomial id = Polynomial::variable(m, i);
        if (!(gl.components[i].compose(sub_left) == id)) rep.left_unit = false;
        if (!(gl.components[i].compose(sub_right) == id)) rep.right_unit = false;
    }

    // associativity over the 3m variables (x, y, z)
    auto var3 = [&](std::size_t i) { return Polynomial::variable(3 * m, i); };
    std::vector<Polynomial> xy_args, yz_args;
    for (std::size_t i = 0; i < m; ++i) xy_args.push_back(var3(i));
    for (std::size_t i = 0; i < m; ++i) xy_args.push_back(var3(m + i));
    for (std::size_t i = 0; i < m; ++i) yz_args.push_back(var3(m + i));
    for (std::size_t i = 0; i < m; ++i) yz_args.push_back(var3(2 * m + i));
    std::vector<Polynomial> xy, yz;
    for (std::size_t i = 0; i < m; ++i) xy.push_back(gl.components[i].compose(xy_args));
    for (std::size_t i = 0; i < m; ++i) yz.push_back(gl.components[i].compose(yz_args));
    std::vector<Polynomial> left_args = xy, right_args;
    for (std::size_t i = 0; i < m; ++i) left_args.push_back(var3(2 * m + i));
    for (std::size_t i = 0; i < m; ++i) right_args.push_back(var3(i));
    right_args.insert(right_args.end(), yz.begin(), yz.end());
    rep.associative = true;
    for (std::size_t i = 0; i < m; ++i)
        if (!(gl.components[i].compose(left_args) == gl.components[i].compose(right_args)))
            rep.associative = false;
    return rep;
}

/// A 1-form is left-invariant when the pullback of the multiplication map,
/// restricted to each leaf {left factor fixed}, reproduces the form itself
/// in the right-factor coordinates.
inline bool verify_left_invariance(const GroupLaw& gl, const PolyForm& alpha) {
    const std::size_t m = gl.m;
    internal_check(alpha.coords() == m && alpha.degree() == 1,
                   "left invariance: expected a 1-form on the group coordinates");
    const PolyForm pulled = pullback(alpha, gl.components);
    std::vector<Polynomial> proj;
    for (std::size_t i = 0; i < m; ++i) proj.push_back(Polynomial::variable(2 * m, m + i));
    return leaf_restrict(pulled, static_cast<int>(m)) == pullback(alpha, proj);
}

namespace detail {

inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& a, std::size_t m) {
    internal_check(m <= 16, "polynomial determinant: matrix too large");
    std::map<unsigned, Polynomial> memo;
    auto rec = [&](auto&& self, unsigned mask, std::size_t row) -> Polynomial {
        if (row == m) return Polynomial::constant(a.empty() ? 0 : a[0][0].nvars(), 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial total(a[0][0].nvars());
        int sign = 1;
        for (std::size_t c = 0; c < m; ++c) {
            if (mask & (1u << c)) continue;
            if (!a[row][c].is_zero())
                total += Rational(sign) * (a[row][c] * self(self, mask | (1u << c), row + 1));
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

struct StructureMatchReport {
    bool coframe_independent = false;     ///< coefficient determinant is a nonzero constant
    std::vector<bool> equation_matches;   ///< d alpha_k vs the structure constants, per k
    bool ok() const {
        if (!coframe_independent) return false;
        for (bool b : equation_matches)
            if (!b) return false;
        return true;
    }
};

/// Check that a coframe of polynomial 1-forms realizes the structure
/// constants: d alpha_k = - sum_{i<j} c_ij^k alpha_i ^ alpha_j.
inline StructureMatchReport match_structure(const std::vector<PolyForm>& coframe,
                                            const LieAlgebra& L) {
    const std::size_t m = L.dim();
    if (coframe.size() != m) throw InputError("coframe: expected one 1-form per dimension");
    for (const PolyForm& a : coframe)
        if (a.coords() != m || a.degree() != 1)
            throw InputError("coframe: entries must be 1-forms on the group coordinates");

    StructureMatchReport rep;
    std::vector<std::vector<Polynomial>> coeff(m,
                                               std::vector<Polynomial>(m, Polynomial(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [idx, c] : coframe[i].terms())
            coeff[i][static_cast<std::size_t>(idx[0])] = c;
    const Polynomial det = detail::poly_det(coeff, m);
    rep.coframe_independent = det.is_constant() && det.constant_value() != 0;

    for (std::size_t k = 0; k < m; ++k) {
        PolyForm expected(m, 2);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Rational c =
                    L.bracket_basis(static_cast<int>(i), static_cast<int>(j))[k];
                if (c != 0) expected += (-c) * wedge(coframe[i], coframe[j]);
            }
        rep.equation_matches.push_back(poly_d(coframe[k]) == expected);
    }
    return rep;
}

/// Parse a polynomial 1-form such as "dx5 + x1*dx4 - (1/2)*x1^2*dx3": the
/// expression is read as a polynomial in x1..xm and the symbols dx1..dxm,
/// which must appear linearly.
inline PolyForm parse_poly_one_form(const std::string& src, std::size_t m) {
    std::vector<std::string> names = coordinate_names(m, "x");
    const std::vector<std::string> dnames = coordinate_names(m, "dx");
    names.insert(names.end(), dnames.begin(), dnames.end());
    const Polynomial p = parse_polynomial(src, names);
    PolyForm f(m, 1);
    for (const auto& [e, c] : p.terms()) {
        int dvar = -1, dtotal = 0;
        for (std::size_t i = m; i < 2 * m; ++i) {
            dtotal += e[i];
            if (e[i] > 0) dvar = static_cast<int>(i - m);
        }
        if (dtotal != 1)
            throw InputError("one-form parse: every term needs exactly one dx factor");
        std::vector<int> base(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m));
        Polynomial coeffpoly(m);
        coeffpoly.add_term(base, c);
        f.add_term({dvar}, coeffpoly);
    }
    return f;
}

/// Render a polynomial 1-form in the syntax parse_poly_one_form accepts.
inline std::string to_string(const PolyForm& f) {
    internal_check(f.degree() == 1, "polyform: only 1-forms have a string rendering");
    if (f.is_zero()) return "0";
    const std::vector<std::string> names = coordinate_names(f.coords(), "x");
    std::string out;
    for (const auto& [idx, c] : f.terms()) {
        const std::string dx = "dx" + std::to_string(idx[0] + 1);
        std::string piece;
        if (c == Polynomial::constant(f.coords(), 1))
            piece = dx;
        else if (c == Polynomial::constant(f.coords(), -1))
            piece = "-" + dx;
        else if (c.terms().size() == 1)
            piece = c.to_string(names) + "*" + dx;
        else
            piece = "(" + c.to_string(names) + ")*" + dx;
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

struct CoordinateModel {
    GroupLaw law;
    std::vector<PolyForm> coframe;
};

struct CoordinateModelReport {
    GroupLawReport group;
    std::vector<bool> invariant;  ///< left invariance of each coframe entry
    StructureMatchReport structure;
    bool ok() const {
        if (!group.ok() || !structure.ok()) return false;
        for (bool b : invariant)
            if (!b) return false;
        return true;
    }
};

inline CoordinateModelReport verify_coordinate_model(const CoordinateModel& model,
                                                     const LieAlgebra& L) {
    if (model.law.m != L.dim())
        throw InputError("coordinate model: dimension disagrees with the algebra");
    CoordinateModelReport rep;
    rep.group = verify_group_law(model.law);
    for (const PolyForm& a : model.coframe)
        rep.invariant.push_back(verify_left_invariance(model.law, a));
    rep.structure = match_structure(model.coframe, L);
    return rep;
}

}  // namespace hardlef
