#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "hardlef/algebra_file.hpp"

namespace hardlef {

namespace detail {

inline BracketTable bracket_list(int dim,
                                 std::initializer_list<std::tuple<int, int, int, int>> items) {
    BracketTable table;
    for (const auto& [i, j, k, c] : items) {
        auto& v = table[{i - 1, j - 1}];
        if (v.empty()) v.assign(static_cast<std::size_t>(dim), Rational(0));
        v[static_cast<std::size_t>(k - 1)] = c;
    }
    return table;
}

inline QMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t n = rows.size();
    QMatrix m(n, n);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int x : row) m(r, c++) = x;
        ++r;
    }
    return m;
}

inline InvariantForm dual_one_form(int dim, int k) {
    return InvariantForm::basis_one_form(dim, k - 1);
}

inline CoordinateModel model_from_strings(int dim, std::vector<std::string> law,
                                          std::vector<std::string> coframe) {
    CoordinateModel model{make_group_law(static_cast<std::size_t>(dim), law), {}};
    for (const std::string& s : coframe)
        model.coframe.push_back(parse_poly_one_form(s, static_cast<std::size_t>(dim)));
    return model;
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"heisenberg3", "heisenberg5", "heisenberg7",
                                                   "paper-ex5d", "paper-ex7d"};
    return names;
}

/// Built-in algebras. Each entry carries a contact form, a candidate
/// structure with the orthonormal metric, a grading, and for the two
/// five- and seven-dimensional graded examples a polynomial model of the
/// simply connected group.
inline AlgebraDocument catalog_entry(const std::string& name) {
    using detail::bracket_list;
    using detail::dual_one_form;
    using detail::int_matrix;

    if (name == "heisenberg3") {
        AlgebraDocument doc{
            name,
            LieAlgebra(3, {}, bracket_list(3, {{1, 2, 3, 1}}), std::vector<int>{1, 1, 2}),
            {},
            {},
            std::nullopt,
            {"Three dimensional Heisenberg algebra. The standard structure is invariantly "
             "Sasakian: its normality tensor vanishes identically."}};
        doc.contact_forms.emplace("alpha3", dual_one_form(3, 3));
        doc.structures.emplace(
            "standard",
            NamedStructure{"alpha3",
                           {int_matrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), QMatrix::identity(3)}});
        return doc;
    }
    if (name == "heisenberg5") {
        AlgebraDocument doc{name,
                            LieAlgebra(5, {}, bracket_list(5, {{1, 2, 5, 1}, {3, 4, 5, 1}}),
                                       std::vector<int>{1, 1, 1, 1, 2}),
                            {},
                            {},
                            std::nullopt,
                            {"Five dimensional Heisenberg algebra, two commuting pairs feeding "
                             "the center. Invariantly Sasakian with the standard structure."}};
        doc.contact_forms.emplace("alpha5", dual_one_form(5, 5));
        doc.structures.emplace("standard",
                               NamedStructure{"alpha5",
                                              {int_matrix({{0, -1, 0, 0, 0},
                                                           {1, 0, 0, 0, 0},
                                                           {0, 0, 0, -1, 0},
                                                           {0, 0, 1, 0, 0},
                                                           {0, 0, 0, 0, 0}}),
                                               QMatrix::identity(5)}});
        return doc;
    }
    if (name == "heisenberg7") {
        AlgebraDocument doc{
            name,
            LieAlgebra(7, {}, bracket_list(7, {{1, 2, 7, 1}, {3, 4, 7, 1}, {5, 6, 7, 1}}),
                       std::vector<int>{1, 1, 1, 1, 1, 1, 2}),
            {},
            {},
            std::nullopt,
            {"Seven dimensional Heisenberg algebra, three commuting pairs feeding the "
             "center. Invariantly Sasakian with the standard structure."}};
        doc.contact_forms.emplace("alpha7", dual_one_form(7, 7));
        doc.structures.emplace("standard",
                               NamedStructure{"alpha7",
                                              {int_matrix({{0, -1, 0, 0, 0, 0, 0},
                                                           {1, 0, 0, 0, 0, 0, 0},
                                                           {0, 0, 0, -1, 0, 0, 0},
                                                           {0, 0, 1, 0, 0, 0, 0},
                                                           {0, 0, 0, 0, 0, -1, 0},
                                                           {0, 0, 0, 0, 1, 0, 0},
                                                           {0, 0, 0, 0, 0, 0, 0}}),
                                               QMatrix::identity(7)}});
        return doc;
    }
    if (name == "paper-ex5d") {
        AlgebraDocument doc{
            name,
            LieAlgebra(5, {},
                       bracket_list(5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, -1}, {2, 3, 5, -1}}),
                       std::vector<int>{1, 2, 3, 4, 5}),
            {},
            {},
            std::nullopt,
            {"Brackets are stored as [X1,X4] = -X5 and [X2,X3] = -X5. Under the convention "
             "d a(X,Y) = -a([X,Y]) this yields d a5 = a1^a4 + a2^a3 and the volume identity "
             "a5^(d a5)^2 = 2 a1^a2^a3^a4^a5. Presentations with [X1,X4] = [X2,X3] = +X5 "
             "describe the same algebra via the isomorphism X5 -> -X5; the bundled "
             "coordinate model realizes the differentials exactly as stored here."}};
        doc.contact_forms.emplace("alpha5", dual_one_form(5, 5));
        doc.structures.emplace("standard",
                               NamedStructure{"alpha5",
                                              {int_matrix({{0, 0, 0, 1, 0},
                                                           {0, 0, 1, 0, 0},
                                                           {0, -1, 0, 0, 0},
                                                           {-1, 0, 0, 0, 0},
                                                           {0, 0, 0, 0, 0}}),
                                               QMatrix::identity(5)}});
        doc.model = detail::model_from_strings(
            5,
            {"x1 + y1", "x2 + y2", "x3 + y3 + x1*y2", "x4 + y4 + x1*y3 + (1/2)*x1^2*y2",
             "x5 + y5 - x1*y4 - (1/2)*x1^2*y3 - x2*y3 - (1/2)*x1*y2^2 - (1/6)*x1^3*y2 "
             "- x1*x2*y2"},
            {"dx1", "dx2", "dx3 - x1*dx2", "dx4 - x1*dx3 + (1/2)*x1^2*dx2",
             "dx5 + x1*dx4 - (1/2)*x1^2*dx3 + (1/6)*x1^3*dx2 + x2*dx3"});
        return doc;
    }
    if (name == "paper-ex7d") {
        AlgebraDocument doc{
            name,
            LieAlgebra(7, {},
                       bracket_list(7, {{1, 2, 3, 1},
                                        {1, 3, 4, 1},
                                        {1, 4, 7, 1},
                                        {2, 3, 7, 1},
                                        {5, 6, 7, 1}}),
                       std::vector<int>{1, 2, 3, 4, 1, 4, 5}),
            {},
            {},
            std::nullopt,
            {"Seven dimensional graded algebra with d a7 = -a1^a4 - a2^a3 - a5^a6 and "
             "contact form a7. The stored grading (1,2,3,4,1,4,5) is compatible with "
             "every bracket."}};
        doc.contact_forms.emplace("alpha7", dual_one_form(7, 7));
        doc.structures.emplace("standard",
                               NamedStructure{"alpha7",
                                              {int_matrix({{0, 0, 0, -1, 0, 0, 0},
                                                           {0, 0, -1, 0, 0, 0, 0},
                                                           {0, 1, 0, 0, 0, 0, 0},
                                                           {1, 0, 0, 0, 0, 0, 0},
                                                           {0, 0, 0, 0, 0, -1, 0},
                                                           {0, 0, 0, 0, 1, 0, 0},
                                                           {0, 0, 0, 0, 0, 0, 0}}),
                                               QMatrix::identity(7)}});
        doc.model = detail::model_from_strings(
            7,
            {"x1 + y1", "x2 + y2", "x3 + y3 + x1*y2", "x4 + y4 + x1*y3 + (1/2)*x1^2*y2",
             "x5 + y5", "x6 + y6",
             "x7 + y7 + x1*y4 + (1/2)*x1^2*y3 + x2*y3 + (1/2)*x1*y2^2 + (1/6)*x1^3*y2 "
             "+ x1*x2*y2 + x5*y6"},
            {"dx1", "dx2", "dx3 - x1*dx2", "dx4 - x1*dx3 + (1/2)*x1^2*dx2", "dx5", "dx6",
             "dx7 - x1*dx4 + (1/2)*x1^2*dx3 - (1/6)*x1^3*dx2 - x2*dx3 - x5*dx6"});
        return doc;
    }
    throw InputError("unknown catalog entry: " + name);
}

}  // namespace hardlef
