#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hardlef/lie_algebra.hpp"

namespace hardlef {

/// Left-invariant k-form, stored sparsely as a map from strictly increasing
/// index tuples (0-based) to nonzero rational coefficients.
///
/// Conventions, fixed once here and relied on everywhere else:
///  * wedge is the determinant (unnormalized) one:
///      (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X),
///    so a basis monomial evaluates to 1 on its own basis vectors;
///  * interior product contracts the first slot, giving sign (-1)^t for
///    removing the index in position t (0-based);
///  * the differential on 1-forms is (d a)(X, Y) = -a([X, Y]), extended as
///    the degree +1 antiderivation. d of d is zero by Jacobi.
class InvariantForm {
  public:
    using Terms = std::map<std::vector<int>, Rational>;

    InvariantForm(int n, int degree) : n_(n), degree_(degree) {
        internal_check(n > 0 && degree >= 0, "form: bad shape");
    }

    static InvariantForm constant(int n, const Rational& c) {
        InvariantForm f(n, 0);
        f.add_term({}, c);
        return f;
    }

    static InvariantForm basis_one_form(int n, int i) {
        InvariantForm f(n, 1);
        f.add_term({i}, 1);
        return f;
    }

    /// Monomial with arbitrary index order; sorts and tracks the sign,
    /// returns the zero form on a repeated index.
    static InvariantForm monomial(int n, std::vector<int> idx, const Rational& c = 1) {
        InvariantForm f(n, static_cast<int>(idx.size()));
        f.add_term(std::move(idx), c);
        return f;
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Add c times the (possibly unordered) monomial idx, with the
    /// permutation sign; repeated indices contribute nothing.
    void add_term(std::vector<int> idx, Rational c) {
        internal_check(static_cast<int>(idx.size()) == degree_, "add_term: degree mismatch");
        if (c == 0) return;
        for (int i : idx) internal_check(i >= 0 && i < n_, "add_term: index out of range");
        // insertion sort, counting inversions for the sign
        for (std::size_t a = 1; a < idx.size(); ++a)
            for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
                if (idx[b - 1] == idx[b]) return;
                std::swap(idx[b - 1], idx[b]);
                c = -c;
            }
        for (std::size_t a = 1; a < idx.size(); ++a)
            if (idx[a - 1] == idx[a]) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(std::move(idx), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(std::vector<int> idx) const {
        std::sort(idx.begin(), idx.end());
        auto it = terms_.find(idx);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    InvariantForm operator-() const {
        InvariantForm f(n_, degree_);
        for (const auto& [idx, c] : terms_) f.terms_.emplace(idx, -c);
        return f;
    }

    InvariantForm& operator+=(const InvariantForm& o) {
        internal_check(n_ == o.n_ && degree_ == o.degree_, "form sum: shape mismatch");
        for (const auto& [idx, c] : o.terms_) {
            auto it = terms_.find(idx);
            if (it == terms_.end()) {
                terms_.emplace(idx, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
    friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a += -b; }

    friend InvariantForm operator*(const Rational& c, const InvariantForm& f) {
        InvariantForm out(f.n_, f.degree_);
        if (c == 0) return out;
        for (const auto& [idx, x] : f.terms_) out.terms_.emplace(idx, c * x);
        return out;
    }

    bool operator==(const InvariantForm& o) const {
        return n_ == o.n_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

  private:
    int n_, degree_;
    Terms terms_;
};

/// Monomial basis of degree k over n generators, in lexicographic order of
/// the increasing index tuples. This order fixes every coordinate vector,
/// matrix and representative choice in the project.
inline std::vector<std::vector<int>> degree_monomials(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        int t = k - 1;
        while (t >= 0 && cur[t] == n - k + t) --t;
        if (t < 0) break;
        ++cur[t];
        for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
    }
    return out;
}

inline std::size_t monomial_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    // small n: plain Pascal walk
    std::size_t c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::size_t>(n - i) / (i + 1);
    return c;
}

inline std::size_t monomial_index(int n, const std::vector<int>& idx) {
    // rank of the increasing tuple in the lexicographic enumeration
    std::size_t rank = 0;
    int prev = -1;
    const int k = static_cast<int>(idx.size());
    for (int t = 0; t < k; ++t) {
        for (int v = prev + 1; v < idx[t]; ++v) rank += monomial_count(n - v - 1, k - t - 1);
        prev = idx[t];
    }
    return rank;
}

inline QVector form_coords(const InvariantForm& f) {
    QVector v(monomial_count(f.n(), f.degree()));
    for (const auto& [idx, c] : f.terms()) v[monomial_index(f.n(), idx)] = c;
    return v;
}

inline InvariantForm form_from_coords(int n, int k, const QVector& v) {
    auto mons = degree_monomials(n, k);
    internal_check(v.size() == mons.size(), "form_from_coords: length mismatch");
    InvariantForm f(n, k);
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (v[i] != 0) f.add_term(mons[i], v[i]);
    return f;
}

inline InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
    internal_check(a.n() == b.n(), "wedge: rank mismatch");
    InvariantForm out(a.n(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.n()) return out;  // above top degree
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(std::move(idx), ca * cb);
        }
    return out;
}

inline InvariantForm wedge_power(const InvariantForm& a, int k) {
    internal_check(k >= 0, "wedge_power: negative exponent");
    InvariantForm out = InvariantForm::constant(a.n(), 1);
    for (int i = 0; i < k; ++i) out = wedge(out, a);
    return out;
}

/// Interior product i_v a (contraction in the first argument). On degree 0
/// this is the zero form, not an error.
inline InvariantForm interior(const QVector& v, const InvariantForm& a) {
    internal_check(v.size() == static_cast<std::size_t>(a.n()), "interior: vector length mismatch");
    InvariantForm out(a.n(), a.degree() == 0 ? 0 : a.degree() - 1);
    if (a.degree() == 0) return out;
    for (const auto& [idx, c] : a.terms()) {
        Rational sign = 1;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (v[idx[t]] != 0) {
                std::vector<int> rest;
                rest.reserve(idx.size() - 1);
                for (std::size_t s = 0; s < idx.size(); ++s)
                    if (s != t) rest.push_back(idx[s]);
                out.add_term(std::move(rest), sign * v[idx[t]] * c);
            }
            sign = -sign;
        }
    }
    return out;
}

/// Exact evaluation on a tuple of vectors: sum over monomials of the
/// coefficient times det(a_{i_s}(v_t)).
inline Rational evaluate(const InvariantForm& a, const std::vector<QVector>& vectors) {
    internal_check(vectors.size() == static_cast<std::size_t>(a.degree()),
                   "evaluate: arity mismatch");
    const int k = a.degree();
    if (k == 0) return a.coeff({});
    Rational total = 0;
    for (const auto& [idx, c] : a.terms()) {
        QMatrix m(k, k);
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t) m(s, t) = vectors[t][idx[s]];
        total += c * det(m);
    }
    return total;
}

/// Chevalley differential. On the basis coframe d a_k = -sum c_ij^k a_i^a_j,
/// extended to monomials by the antiderivation rule.
inline InvariantForm ce_d(const LieAlgebra& L, const InvariantForm& a) {
    internal_check(a.n() == L.dim(), "ce_d: rank mismatch");
    InvariantForm out(a.n(), a.degree() + 1);
    if (a.degree() >= a.n()) return out;
    // differentials of the basis one-forms
    std::vector<InvariantForm> d1;
    for (int k = 0; k < L.dim(); ++k) d1.push_back(InvariantForm(L.dim(), 2));
    for (const auto& [key, value] : L.brackets()) {
        const auto [i, j] = key;
        for (int k = 0; k < L.dim(); ++k)
            if (value[k] != 0) d1[k].add_term({i, j}, -value[k]);
    }
    for (const auto& [idx, c] : a.terms()) {
        Rational sign = 1;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            std::vector<int> rest;
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            for (const auto& [dij, dc] : d1[idx[t]].terms()) {
                std::vector<int> merged = dij;
                merged.insert(merged.end(), rest.begin(), rest.end());
                out.add_term(std::move(merged), sign * c * dc);
            }
            sign = -sign;
        }
    }
    return out;
}

/// Render like "2 a1^a2 - 1/2 a3^a4^a5"; degree 0 prints the bare scalar.
/// Parse the rendering produced by to_string below: a signed sum of terms
/// "coeff a_i^a_j^...", where the coefficient is an optional rational (a
/// '*' may stand in for the separating space) and basis covectors are named
/// a1..an. Pass degree -1 to infer the degree from the first monomial.
inline InvariantForm parse_invariant_form(std::string_view src, int n, int degree = -1) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw InputError("form parse error at offset " + std::to_string(pos) + ": " + what);
    };
    auto read_uint = [&]() -> int {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(std::string(src.substr(start, pos - start)));
    };

    struct Piece {
        Rational c;
        std::vector<int> idx;
        bool has_mono;
    };
    std::vector<Piece> pieces;
    skip();
    if (pos == src.size()) fail("empty form");
    bool first = true;
    while (pos < src.size()) {
        int sign = 1;
        skip();
        if (!first) {
            if (src[pos] == '+') {
                ++pos;
            } else if (src[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                fail("expected '+' or '-' between terms");
            }
            skip();
        } else if (src[pos] == '-') {
            sign = -1;
            ++pos;
            skip();
        }
        first = false;
        Piece piece{1, {}, false};
        bool has_coeff = false;
        if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            has_coeff = true;
            Rational num = read_uint();
            if (pos < src.size() && src[pos] == '/') {
                ++pos;
                Rational den = read_uint();
                if (den == 0) fail("zero denominator");
                num /= den;
            }
            piece.c = num;
            skip();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
                skip();
            }
        }
        if (pos < src.size() && src[pos] == 'a') {
            piece.has_mono = true;
            while (true) {
                if (pos >= src.size() || src[pos] != 'a') fail("expected a basis covector");
                ++pos;
                int k = read_uint();
                if (k < 1 || k > n) fail("covector index out of range");
                piece.idx.push_back(k - 1);
                skip();
                if (pos < src.size() && src[pos] == '^') {
                    ++pos;
                    skip();
                    continue;
                }
                break;
            }
        } else if (!has_coeff) {
            fail("expected a coefficient or a monomial");
        }
        piece.c *= sign;
        pieces.push_back(std::move(piece));
        skip();
    }

    int deg = degree;
    if (deg < 0) {
        for (const Piece& p : pieces)
            if (p.has_mono || p.c != 0) {
                deg = p.has_mono ? static_cast<int>(p.idx.size()) : 0;
                break;
            }
        if (deg < 0) fail("cannot infer the degree of the zero form");
    }
    InvariantForm out(n, deg);
    for (const Piece& p : pieces) {
        if (!p.has_mono) {
            if (p.c == 0) continue;
            if (deg != 0) fail("constant term in a form of positive degree");
            out.add_term({}, p.c);
        } else {
            if (static_cast<int>(p.idx.size()) != deg) fail("mixed degrees in one form");
            out.add_term(p.idx, p.c);
        }
    }
    return out;
}

inline std::string to_string(const InvariantForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : f.terms()) {
        std::string mono;
        for (std::size_t t = 0; t < idx.size(); ++t)
            mono += (t ? "^" : "") + ("a" + std::to_string(idx[t] + 1));
        std::string coeff;
        if (c == 1)
            coeff = "";
        else if (c == -1)
            coeff = "-";
        else
            coeff = to_string(c) + (mono.empty() ? "" : " ");
        if (mono.empty() && (c == 1 || c == -1)) coeff = to_string(c);
        std::string piece = coeff + mono;
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace hardlef
