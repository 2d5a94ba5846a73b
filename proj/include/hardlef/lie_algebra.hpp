#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardlef/subspace.hpp"

namespace hardlef {

/// Structure constants are stored for index pairs i < j only (0-based);
/// [e_j, e_i] follows by antisymmetry. Values are dense coefficient vectors.
using BracketTable = std::map<std::pair<int, int>, QVector>;

struct JacobiViolation {
    int i, j, k;     ///< 0-based basis triple, i < j < k
    QVector defect;  ///< [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

struct NilpotencyReport {
    bool nilpotent = false;
    /// Dimensions of the lower central series g, [g,g], [g,[g,g]], ...
    /// down to the first repeated value (0 when nilpotent).
    std::vector<std::size_t> series_dims;
};

class LieAlgebra {
  public:
    /// Validates index ranges and the Jacobi identity; a violation is an
    /// input error carrying the first offending triple. An optional grading
    /// must satisfy w_i + w_j = w_k on every nonzero structure constant.
    LieAlgebra(int dim, std::vector<std::string> names, BracketTable brackets,
               std::optional<std::vector<int>> grading = std::nullopt)
        : dim_(dim), names_(std::move(names)), brackets_(std::move(brackets)) {
        if (dim_ <= 0) throw InputError("algebra dimension must be positive");
        if (names_.empty())
            for (int i = 1; i <= dim_; ++i) names_.push_back("X" + std::to_string(i));
        if (static_cast<int>(names_.size()) != dim_)
            throw InputError("basis name count does not match dimension");
        for (const auto& [key, value] : brackets_) {
            const auto [i, j] = key;
            if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
                throw InputError("bracket index out of range");
            if (i >= j) throw InputError("brackets must be keyed by pairs i < j");
            if (value.size() != static_cast<std::size_t>(dim_))
                throw InputError("bracket value has wrong length");
        }
        auto bad = jacobi_violations(dim_, brackets_);
        if (!bad.empty()) {
            const auto& v = bad.front();
            throw InputError("Jacobi identity fails on basis triple (" + std::to_string(v.i + 1) +
                             "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ")");
        }
        if (grading) {
            if (static_cast<int>(grading->size()) != dim_)
                throw InputError("grading weight count does not match dimension");
            for (int w : *grading)
                if (w <= 0) throw InputError("grading weights must be positive");
            if (!grading_consistent(dim_, brackets_, *grading))
                throw InputError("grading is inconsistent with the brackets");
            grading_ = std::move(grading);
        }
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    const BracketTable& brackets() const { return brackets_; }
    const std::optional<std::vector<int>>& grading() const { return grading_; }

    /// [e_i, e_j] for any index order (antisymmetric, zero on the diagonal).
    QVector bracket_basis(int i, int j) const {
        QVector out(dim_);
        if (i == j) return out;
        const bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = brackets_.find({i, j});
        if (it == brackets_.end()) return out;
        out = it->second;
        if (flip)
            for (Rational& x : out) x = -x;
        return out;
    }

    /// Bilinear extension of the structure constants.
    QVector bracket(const QVector& v, const QVector& w) const {
        internal_check(v.size() == static_cast<std::size_t>(dim_) && w.size() == v.size(),
                       "bracket: vector length mismatch");
        QVector out(dim_);
        for (const auto& [key, value] : brackets_) {
            const auto [i, j] = key;
            const Rational coeff = v[i] * w[j] - v[j] * w[i];
            if (coeff == 0) continue;
            for (int k = 0; k < dim_; ++k) out[k] += coeff * value[k];
        }
        return out;
    }

    /// Matrix of ad_v : x -> [v, x] in the chosen basis.
    QMatrix ad(const QVector& v) const {
        QMatrix m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            QVector e(dim_);
            e[j] = 1;
            QVector img = bracket(v, e);
            for (int i = 0; i < dim_; ++i) m(i, j) = img[i];
        }
        return m;
    }

    /// Center as the joint kernel of all basis adjoints.
    Subspace center() const {
        QMatrix stacked(0, dim_);
        for (int i = 0; i < dim_; ++i) {
            QVector e(dim_);
            e[i] = 1;
            stacked = QMatrix::vstack(stacked, ad(e));
        }
        return kernel_basis(stacked);
    }

    NilpotencyReport nilpotency() const {
        NilpotencyReport rep;
        Subspace layer = Subspace::full(dim_);
        rep.series_dims.push_back(layer.dim());
        while (true) {
            std::vector<QVector> gens;
            for (int i = 0; i < dim_; ++i) {
                QVector e(dim_);
                e[i] = 1;
                for (const QVector& b : layer.basis()) gens.push_back(bracket(e, b));
            }
            Subspace next = Subspace::span(dim_, gens);
            if (next.dim() == layer.dim()) break;
            layer = next;
            rep.series_dims.push_back(layer.dim());
            if (layer.dim() == 0) break;
        }
        rep.nilpotent = rep.series_dims.back() == 0;
        return rep;
    }

    /// All Jacobi defects of a candidate bracket table, in triple order.
    static std::vector<JacobiViolation> jacobi_violations(int dim, const BracketTable& brackets) {
        LieAlgebra probe = unchecked(dim, brackets);
        std::vector<JacobiViolation> out;
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    QVector ei(dim), ej(dim), ek(dim);
                    ei[i] = 1;
                    ej[j] = 1;
                    ek[k] = 1;
                    QVector defect = probe.bracket(probe.bracket(ei, ej), ek);
                    QVector t2 = probe.bracket(probe.bracket(ej, ek), ei);
                    QVector t3 = probe.bracket(probe.bracket(ek, ei), ej);
                    bool zero = true;
                    for (int c = 0; c < dim; ++c) {
                        defect[c] += t2[c] + t3[c];
                        if (defect[c] != 0) zero = false;
                    }
                    if (!zero) out.push_back({i, j, k, std::move(defect)});
                }
        return out;
    }

    static bool grading_consistent(int dim, const BracketTable& brackets,
                                   const std::vector<int>& weights) {
        if (static_cast<int>(weights.size()) != dim)
            throw InputError("grading weight count does not match dimension");
        for (int w : weights)
            if (w <= 0) throw InputError("grading weights must be positive");
        for (const auto& [key, value] : brackets) {
            const auto [i, j] = key;
            for (int k = 0; k < dim; ++k)
                if (value[k] != 0 && weights[i] + weights[j] != weights[k]) return false;
        }
        return true;
    }

  private:
    LieAlgebra() = default;

    static LieAlgebra unchecked(int dim, const BracketTable& brackets) {
        LieAlgebra a;
        a.dim_ = dim;
        a.brackets_ = brackets;
        return a;
    }

    int dim_ = 0;
    std::vector<std::string> names_;
    BracketTable brackets_;
    std::optional<std::vector<int>> grading_;
};

}  // namespace hardlef
