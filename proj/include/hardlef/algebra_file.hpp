#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardlef/contact.hpp"
#include "hardlef/polyform.hpp"

namespace hardlef {

using nlohmann::json;

/// A phi/metric pair bound to one of the document's named 1-forms.
struct NamedStructure {
    std::string eta;
    MetricStructure tensors;
};

/// Everything an input file can carry: the algebra itself plus optional
/// named contact form candidates (1-forms as coefficient vectors), candidate
/// contact metric structures, a polynomial coordinate model of the simply
/// connected group, and free-text notes.
struct AlgebraDocument {
    std::string name;
    LieAlgebra algebra;
    std::map<std::string, InvariantForm> contact_forms;
    std::map<std::string, NamedStructure> structures;
    std::optional<CoordinateModel> model;
    std::vector<std::string> notes;
};

namespace detail {

inline void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
}

inline void check_keys(const json& j, const std::vector<std::string>& required,
                       const std::vector<std::string>& optional, const std::string& where) {
    require_object(j, where);
    for (const std::string& k : required)
        if (!j.contains(k)) throw InputError(where + ": missing required key \"" + k + "\"");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const std::string& r : required) known = known || k == r;
        for (const std::string& o : optional) known = known || k == o;
        if (!known) throw InputError(where + ": unknown key \"" + k + "\"");
    }
}

inline int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<int>();
}

inline std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

inline QMatrix get_matrix(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw InputError(where + ": expected " + std::to_string(dim) + " rows");
    QMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim)
            throw InputError(where + ": expected " + std::to_string(dim) + " entries per row");
        for (std::size_t c = 0; c < dim; ++c)
            m(r, c) = parse_rational(get_string(j[r][c], where + " entry"));
    }
    return m;
}

inline int parse_index_key(const std::string& key, int dim, const std::string& where) {
    if (key.empty() || key.size() > 3) throw InputError(where + ": bad basis index \"" + key + "\"");
    for (char ch : key)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw InputError(where + ": bad basis index \"" + key + "\"");
    const int k = std::stoi(key);
    if (k < 1 || k > dim || key != std::to_string(k))
        throw InputError(where + ": basis index \"" + key + "\" out of range");
    return k;
}

}  // namespace detail

inline AlgebraDocument parse_algebra_document(const json& j) {
    detail::check_keys(j, {"dim", "brackets"},
                       {"name", "basis", "grading", "contact_forms", "structures",
                        "coordinate_model", "notes"},
                       "algebra document");
    const int dim = detail::get_int(j["dim"], "dim");
    if (dim < 1 || dim > 16) throw InputError("dim: expected an integer between 1 and 16");

    std::string name;
    if (j.contains("name")) name = detail::get_string(j["name"], "name");

    std::vector<std::string> basis;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != static_cast<std::size_t>(dim))
            throw InputError("basis: expected one name per dimension");
        for (const json& b : j["basis"]) basis.push_back(detail::get_string(b, "basis entry"));
    }

    std::optional<std::vector<int>> grading;
    if (j.contains("grading")) {
        if (!j["grading"].is_array() || j["grading"].size() != static_cast<std::size_t>(dim))
            throw InputError("grading: expected one weight per dimension");
        std::vector<int> w;
        for (const json& g : j["grading"]) w.push_back(detail::get_int(g, "grading entry"));
        grading = std::move(w);
    }

    if (!j["brackets"].is_array()) throw InputError("brackets: expected an array");
    BracketTable table;
    for (const json& entry : j["brackets"]) {
        detail::check_keys(entry, {"on", "result"}, {}, "bracket entry");
        const json& on = entry["on"];
        if (!on.is_array() || on.size() != 2)
            throw InputError("bracket entry: \"on\" must hold two basis indices");
        const int i = detail::get_int(on[0], "bracket index");
        const int jj = detail::get_int(on[1], "bracket index");
        if (i < 1 || jj < 1 || i > dim || jj > dim)
            throw InputError("bracket entry: index out of range");
        if (i >= jj)
            throw InputError("bracket entry: store each bracket once, with on = [i, j], i < j");
        if (table.count({i - 1, jj - 1}))
            throw InputError("bracket entry: duplicate bracket for [" + std::to_string(i) + ", " +
                             std::to_string(jj) + "]");
        detail::require_object(entry["result"], "bracket result");
        QVector v(dim, Rational(0));
        bool nonzero = false;
        for (const auto& [key, val] : entry["result"].items()) {
            const int k = detail::parse_index_key(key, dim, "bracket result");
            v[k - 1] = parse_rational(detail::get_string(val, "bracket coefficient"));
            nonzero = nonzero || v[k - 1] != 0;
        }
        if (nonzero) table[{i - 1, jj - 1}] = std::move(v);
    }

    AlgebraDocument doc{std::move(name), LieAlgebra(dim, std::move(basis), std::move(table), grading),
                        {}, {}, std::nullopt, {}};

    if (j.contains("contact_forms")) {
        detail::require_object(j["contact_forms"], "contact_forms");
        for (const auto& [fname, fval] : j["contact_forms"].items()) {
            if (fname.empty()) throw InputError("contact_forms: empty form name");
            if (!fval.is_array() || fval.size() != static_cast<std::size_t>(dim))
                throw InputError("contact form \"" + fname +
                                 "\": expected one coefficient per basis covector");
            InvariantForm f(dim, 1);
            for (int i = 0; i < dim; ++i)
                f.add_term({i}, parse_rational(detail::get_string(fval[i], "form coefficient")));
            doc.contact_forms.emplace(fname, std::move(f));
        }
    }

    if (j.contains("structures")) {
        detail::require_object(j["structures"], "structures");
        for (const auto& [sname, sval] : j["structures"].items()) {
            detail::check_keys(sval, {"eta", "phi", "metric"}, {}, "structure \"" + sname + "\"");
            NamedStructure ns;
            ns.eta = detail::get_string(sval["eta"], "structure eta");
            if (!doc.contact_forms.count(ns.eta))
                throw InputError("structure \"" + sname +
                                 "\": eta references unknown contact form \"" + ns.eta + "\"");
            ns.tensors.phi = detail::get_matrix(sval["phi"], dim, "structure phi");
            ns.tensors.metric = detail::get_matrix(sval["metric"], dim, "structure metric");
            doc.structures.emplace(sname, std::move(ns));
        }
    }

    if (j.contains("coordinate_model")) {
        detail::check_keys(j["coordinate_model"], {"group_law", "coframe"}, {},
                           "coordinate model");
        const json& gl = j["coordinate_model"]["group_law"];
        const json& cf = j["coordinate_model"]["coframe"];
        if (!gl.is_array() || gl.size() != static_cast<std::size_t>(dim))
            throw InputError("coordinate model: group_law needs one component per dimension");
        if (!cf.is_array() || cf.size() != static_cast<std::size_t>(dim))
            throw InputError("coordinate model: coframe needs one 1-form per dimension");
        std::vector<std::string> comps;
        for (const json& c : gl) comps.push_back(detail::get_string(c, "group law component"));
        CoordinateModel model{make_group_law(dim, comps), {}};
        for (const json& c : cf)
            model.coframe.push_back(
                parse_poly_one_form(detail::get_string(c, "coframe entry"), dim));
        doc.model = std::move(model);
    }

    if (j.contains("notes")) {
        if (!j["notes"].is_array()) throw InputError("notes: expected an array of strings");
        for (const json& n : j["notes"]) doc.notes.push_back(detail::get_string(n, "note"));
    }
    return doc;
}

inline AlgebraDocument parse_algebra_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_algebra_document(j);
}

inline AlgebraDocument load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_document(buf.str());
}

inline json to_json(const AlgebraDocument& doc) {
    const LieAlgebra& L = doc.algebra;
    json j;
    j["dim"] = L.dim();
    if (!doc.name.empty()) j["name"] = doc.name;
    j["basis"] = L.names();
    if (L.grading()) j["grading"] = *L.grading();
    j["brackets"] = json::array();
    for (const auto& [ij, v] : L.brackets()) {
        json entry;
        entry["on"] = {ij.first + 1, ij.second + 1};
        json result = json::object();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) result[std::to_string(k + 1)] = to_string(v[k]);
        entry["result"] = std::move(result);
        j["brackets"].push_back(std::move(entry));
    }
    if (!doc.contact_forms.empty()) {
        json forms = json::object();
        for (const auto& [fname, f] : doc.contact_forms) {
            json coeffs = json::array();
            for (int i = 0; i < L.dim(); ++i) coeffs.push_back(to_string(f.coeff({i})));
            forms[fname] = std::move(coeffs);
        }
        j["contact_forms"] = std::move(forms);
    }
    if (!doc.structures.empty()) {
        json structures = json::object();
        for (const auto& [sname, ns] : doc.structures) {
            json s;
            s["eta"] = ns.eta;
            auto render = [&](const QMatrix& m) {
                json rows = json::array();
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    json row = json::array();
                    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
                    rows.push_back(std::move(row));
                }
                return rows;
            };
            s["phi"] = render(ns.tensors.phi);
            s["metric"] = render(ns.tensors.metric);
            structures[sname] = std::move(s);
        }
        j["structures"] = std::move(structures);
    }
    if (doc.model) {
        std::vector<std::string> names = coordinate_names(L.dim(), "x");
        const std::vector<std::string> ynames = coordinate_names(L.dim(), "y");
        names.insert(names.end(), ynames.begin(), ynames.end());
        json model;
        model["group_law"] = json::array();
        for (const Polynomial& c : doc.model->law.components)
            model["group_law"].push_back(c.to_string(names));
        model["coframe"] = json::array();
        for (const PolyForm& a : doc.model->coframe)
            model["coframe"].push_back(to_string(a));
        j["coordinate_model"] = std::move(model);
    }
    if (!doc.notes.empty()) j["notes"] = doc.notes;
    return j;
}

inline std::string serialize_algebra_document(const AlgebraDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

}  // namespace hardlef
