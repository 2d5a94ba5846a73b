#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hardlef/algebra_file.hpp"
#include "hardlef/catalog.hpp"
#include "hardlef/cohomology.hpp"
#include "hardlef/lefschetz.hpp"

namespace hardlef {

struct ContactFormReport {
    std::string form_name;
    InvariantForm eta;
    ContactCheck check;
    std::optional<QVector> xi;
    std::optional<HardLefschetzReport> lefschetz;
    ContactFormReport() : eta(1, 1) {}
};

struct StructureReport {
    std::string structure_name;
    KContactReport report;
};

struct Dossier {
    AlgebraDocument doc;
    NilpotencyReport nilpotency;
    std::vector<std::size_t> betti;
    std::optional<ParityReport> parity;
    std::vector<ContactFormReport> contact_forms;
    std::vector<StructureReport> structures;
    std::optional<CoordinateModelReport> model_report;
    OverallOutcome overall = OverallOutcome::INCONCLUSIVE;
};

/// Run every analysis the document supports. Deterministic: identical input
/// yields an identical dossier.
inline Dossier run_dossier(const AlgebraDocument& doc) {
    const LieAlgebra& L = doc.algebra;
    Dossier d{doc, L.nilpotency(), betti_vector(L), std::nullopt, {}, {}, std::nullopt,
              OverallOutcome::INCONCLUSIVE};
    if (L.dim() % 2 == 1) d.parity = parity_report(L);

    bool any_certified = false;
    bool all_pass = !doc.contact_forms.empty();
    for (const auto& [fname, eta] : doc.contact_forms) {
        ContactFormReport r;
        r.form_name = fname;
        r.eta = eta;
        r.check = is_contact(L, eta);
        if (r.check.contact) {
            r.xi = reeb(L, eta);
            r.lefschetz = hard_lefschetz_report(L, eta);
            any_certified =
                any_certified || r.lefschetz->overall == OverallOutcome::NON_SASAKIAN_CERTIFIED;
            all_pass =
                all_pass && r.lefschetz->overall == OverallOutcome::LEFSCHETZ_INVARIANT_PASS;
        } else {
            all_pass = false;
        }
        d.contact_forms.push_back(std::move(r));
    }
    d.overall = any_certified  ? OverallOutcome::NON_SASAKIAN_CERTIFIED
                : all_pass     ? OverallOutcome::LEFSCHETZ_INVARIANT_PASS
                               : OverallOutcome::INCONCLUSIVE;

    for (const auto& [sname, ns] : doc.structures) {
        const InvariantForm& eta = doc.contact_forms.at(ns.eta);
        d.structures.push_back({sname, k_contact_report(L, eta, ns.tensors)});
    }
    if (doc.model) d.model_report = verify_coordinate_model(*doc.model, L);
    return d;
}

namespace detail {

inline std::string render_vector(const QVector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coeff;
        if (v[i] == 1)
            coeff = "";
        else if (v[i] == -1)
            coeff = "-";
        else
            coeff = to_string(v[i]) + " ";
        std::string piece = coeff + names[i];
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

inline json coeff_vector_json(const InvariantForm& f) {
    json a = json::array();
    for (int i = 0; i < f.n(); ++i) a.push_back(to_string(f.coeff({i})));
    return a;
}

inline json rational_vector_json(const QVector& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(to_string(x));
    return a;
}

}  // namespace detail

/// Canonical identity string stored inside a certificate; the verifier
/// reconstructs it from the structured fields and requires equality.
inline std::string certificate_identity(int n, int p, const Witness& w) {
    const std::string image = "eta^(d eta)^" + std::to_string(n - p) + "^beta";
    if (w.kind == Witness::Kind::NonInjective)
        return image + " = " + to_string(w.omega) + " = d(" + to_string(w.primitive) +
               "), with [beta] != 0 for beta = " + to_string(w.beta);
    return "beta = " + to_string(w.beta) + " = d(" + to_string(w.primitive) + "), with [" + image +
           "] != 0 for " + image + " = " + to_string(w.omega);
}

/// Self-contained, replayable certificate for one SOUND_FAIL witness. The
/// emitter replays the witness before serializing anything.
inline json certificate_to_json(const AlgebraDocument& doc, const std::string& form_name,
                                const InvariantForm& eta, int p, const Witness& w) {
    const LieAlgebra& L = doc.algebra;
    internal_check(replay_witness(L, eta, p, w),
                   "certificate emitter: witness failed its replay");
    AlgebraDocument bare{doc.name, L, {}, {}, std::nullopt, {}};
    json c;
    c["type"] = "lefschetz_sound_fail";
    c["algebra"] = to_json(bare);
    c["contact_form"] = form_name;
    c["eta"] = detail::coeff_vector_json(eta);
    c["p"] = p;
    c["kind"] = w.kind == Witness::Kind::NonInjective ? "noninjective" : "functionality";
    c["beta"] = to_string(w.beta);
    c["omega"] = to_string(w.omega);
    c["primitive"] = to_string(w.primitive);
    c["identity"] = certificate_identity(contact_n(L), p, w);
    return c;
}

/// Replay one certificate from its serialized fields alone. Throws
/// InputError with the first failing condition.
inline std::string verify_certificate_json(const json& c) {
    detail::check_keys(c,
                       {"type", "algebra", "contact_form", "eta", "p", "kind", "beta", "omega",
                        "primitive", "identity"},
                       {}, "certificate");
    if (detail::get_string(c["type"], "certificate type") != "lefschetz_sound_fail")
        throw InputError("certificate: unknown type");
    const AlgebraDocument doc = parse_algebra_document(c["algebra"]);
    const LieAlgebra& L = doc.algebra;
    const int n = contact_n(L);

    if (!c["eta"].is_array() || c["eta"].size() != static_cast<std::size_t>(L.dim()))
        throw InputError("certificate: eta must list one coefficient per covector");
    InvariantForm eta(L.dim(), 1);
    for (int i = 0; i < L.dim(); ++i)
        eta.add_term({i}, parse_rational(detail::get_string(c["eta"][i], "eta coefficient")));
    if (!is_contact(L, eta).contact) throw InputError("certificate: eta is not contact");

    const int p = detail::get_int(c["p"], "certificate p");
    if (p < 0 || p > n) throw InputError("certificate: degree p out of range");
    const std::string kind = detail::get_string(c["kind"], "certificate kind");
    Witness w;
    if (kind == "noninjective")
        w.kind = Witness::Kind::NonInjective;
    else if (kind == "functionality")
        w.kind = Witness::Kind::Functionality;
    else
        throw InputError("certificate: unknown witness kind");
    w.beta = parse_invariant_form(detail::get_string(c["beta"], "beta"), L.dim(), p);
    w.omega = parse_invariant_form(detail::get_string(c["omega"], "omega"), L.dim(), L.dim() - p);
    const int prim_degree = w.kind == Witness::Kind::NonInjective ? L.dim() - p - 1 : p - 1;
    if (prim_degree < 0) throw InputError("certificate: witness degree admits no primitive");
    w.primitive =
        parse_invariant_form(detail::get_string(c["primitive"], "primitive"), L.dim(), prim_degree);

    if (!replay_witness(L, eta, p, w))
        throw InputError("certificate: replay failed, the stated identities do not hold");
    if (detail::get_string(c["identity"], "identity") != certificate_identity(n, p, w))
        throw InputError("certificate: identity string does not match the structured fields");
    return "valid " + kind + " witness in degree " + std::to_string(p) + " on " +
           (doc.name.empty() ? std::string("a ") + std::to_string(L.dim()) + "-dim algebra"
                             : doc.name);
}

/// Pull every certificate out of a JSON payload: a single certificate
/// object, an object with a "certificates" array, or a full dossier.
inline std::vector<json> collect_certificates(const json& j) {
    detail::require_object(j, "certificate file");
    if (j.contains("type")) return {j};
    std::vector<json> found;
    if (j.contains("certificates")) {
        for (const json& c : j["certificates"]) found.push_back(c);
        return found;
    }
    if (j.contains("contact_forms") && j["contact_forms"].is_object()) {
        for (const auto& [fname, fr] : j["contact_forms"].items()) {
            (void)fname;
            if (fr.is_object() && fr.contains("certificates"))
                for (const json& c : fr["certificates"]) found.push_back(c);
        }
        return found;
    }
    throw InputError("certificate file: neither a certificate, nor a dossier, "
                     "nor a certificate bundle");
}

inline json dossier_to_json(const Dossier& d) {
    const LieAlgebra& L = d.doc.algebra;
    json j;
    if (!d.doc.name.empty()) j["name"] = d.doc.name;
    j["dim"] = L.dim();
    j["jacobi"] = "ok";
    j["nilpotent"] = d.nilpotency.nilpotent;
    j["lower_central_series"] = d.nilpotency.series_dims;
    if (L.grading()) j["grading"] = *L.grading();
    j["cohomology_model"] =
        "Chevalley-Eilenberg H*(g); for the compact nilmanifold quotient G/Gamma this "
        "computes H*_dR (Nomizu)";
    j["betti"] = d.betti;
    if (d.parity) {
        json rows = json::array();
        for (const auto& row : d.parity->rows)
            rows.push_back({{"p", row.p},
                            {"b", row.b},
                            {"required_even", row.required_even},
                            {"satisfied", row.satisfied}});
        j["parity"] = {{"n", d.parity->n}, {"rows", rows}, {"obstruction", d.parity->obstruction}};
    }
    if (!d.contact_forms.empty()) {
        json forms = json::object();
        for (const ContactFormReport& r : d.contact_forms) {
            json f;
            f["eta"] = detail::coeff_vector_json(r.eta);
            f["contact"] = r.check.contact;
            f["volume"] = to_string(r.check.volume);
            if (r.xi) f["reeb"] = detail::rational_vector_json(*r.xi);
            if (r.lefschetz) {
                json degrees = json::array();
                json certs = json::array();
                for (const LefschetzVerdict& v : r.lefschetz->verdicts) {
                    json deg;
                    deg["p"] = v.p;
                    deg["outcome"] = to_string(v.outcome);
                    deg["dims"] = {{"admissible", v.diag.dim_admissible},
                                   {"relation", v.diag.dim_relation},
                                   {"projection_1", v.diag.dim_proj1},
                                   {"projection_2", v.diag.dim_proj2},
                                   {"kernel_side", v.diag.dim_kernel_side},
                                   {"value_side", v.diag.dim_value_side}};
                    if (!v.witnesses.empty()) {
                        json ws = json::array();
                        for (const Witness& w : v.witnesses) {
                            ws.push_back(
                                {{"kind", w.kind == Witness::Kind::NonInjective ? "noninjective"
                                                                                : "functionality"},
                                 {"beta", to_string(w.beta)},
                                 {"omega", to_string(w.omega)},
                                 {"primitive", to_string(w.primitive)}});
                            certs.push_back(
                                certificate_to_json(d.doc, r.form_name, r.eta, v.p, w));
                        }
                        deg["witnesses"] = std::move(ws);
                    }
                    degrees.push_back(std::move(deg));
                }
                f["lefschetz"] = {{"overall", to_string(r.lefschetz->overall)},
                                  {"degrees", degrees}};
                if (r.lefschetz->first_fail_p >= 0)
                    f["lefschetz"]["first_fail_p"] = r.lefschetz->first_fail_p;
                f["certificates"] = std::move(certs);
            }
            forms[r.form_name] = std::move(f);
        }
        j["contact_forms"] = std::move(forms);
    }
    if (!d.structures.empty()) {
        json structures = json::object();
        for (const StructureReport& s : d.structures) {
            json sj;
            sj["contact_metric"] = s.report.contact_metric;
            sj["k_contact"] = s.report.k_contact;
            sj["invariant_sasakian"] = s.report.invariant_sasakian;
            json axioms = json::object();
            for (const AxiomResult& a : s.report.metric_report.axioms) {
                json aj;
                aj["pass"] = a.pass;
                if (!a.pass && a.counterexample)
                    aj["counterexample"] = {L.names()[a.counterexample->first],
                                            L.names()[a.counterexample->second]};
                if (!a.detail.empty()) aj["detail"] = a.detail;
                axioms[a.id] = std::move(aj);
            }
            sj["axioms"] = std::move(axioms);
            sj["normality_zero"] = s.report.normality.zero;
            if (s.report.normality.first_nonzero) {
                const auto [i, jj] = *s.report.normality.first_nonzero;
                sj["normality_first_nonzero"] = {L.names()[i], L.names()[jj]};
            }
            structures[s.structure_name] = std::move(sj);
        }
        j["structures"] = std::move(structures);
    }
    if (d.model_report) {
        json m;
        m["group_law"] = {{"left_unit", d.model_report->group.left_unit},
                          {"right_unit", d.model_report->group.right_unit},
                          {"associative", d.model_report->group.associative}};
        m["left_invariant"] = d.model_report->invariant;
        m["coframe_independent"] = d.model_report->structure.coframe_independent;
        m["structure_equations_match"] = d.model_report->structure.equation_matches;
        m["ok"] = d.model_report->ok();
        j["coordinate_model"] = std::move(m);
    }
    j["overall"] = to_string(d.overall);
    return j;
}

inline std::string dossier_to_text(const Dossier& d) {
    const LieAlgebra& L = d.doc.algebra;
    std::ostringstream out;
    out << "algebra: " << (d.doc.name.empty() ? "(unnamed)" : d.doc.name) << " (dim " << L.dim()
        << ")\n";
    out << "jacobi: ok\n";
    out << "nilpotent: " << (d.nilpotency.nilpotent ? "yes" : "no")
        << "; lower central series dims:";
    for (std::size_t s : d.nilpotency.series_dims) out << " " << s;
    out << "\n";
    if (L.grading()) {
        out << "grading:";
        for (int w : *L.grading()) out << " " << w;
        out << "\n";
    }
    out << "cohomology model: Chevalley-Eilenberg H*(g); equals H*_dR of the compact "
           "nilmanifold quotient (Nomizu)\n";
    out << "betti:";
    for (std::size_t b : d.betti) out << " " << b;
    out << "\n";
    if (d.parity) {
        for (const auto& row : d.parity->rows)
            if (row.required_even)
                out << "parity p=" << row.p << ": b=" << row.b
                    << (row.satisfied ? " even, ok" : " odd, OBSTRUCTION") << "\n";
        out << "parity obstruction: " << (d.parity->obstruction ? "yes" : "none") << "\n";
    }
    for (const ContactFormReport& r : d.contact_forms) {
        out << "contact form " << r.form_name << ": ";
        if (!r.check.contact) {
            out << "not contact\n";
            continue;
        }
        out << "contact; volume = " << to_string(r.check.volume)
            << "; reeb = " << detail::render_vector(*r.xi, L.names()) << "\n";
        for (const LefschetzVerdict& v : r.lefschetz->verdicts) {
            out << "  lefschetz p=" << v.p << ": " << to_string(v.outcome)
                << " (admissible " << v.diag.dim_admissible << ", relation "
                << v.diag.dim_relation << ")\n";
            for (const Witness& w : v.witnesses) {
                if (w.kind == Witness::Kind::NonInjective)
                    out << "    witness: beta = " << to_string(w.beta) << " with [beta] != 0, "
                        << "image = " << to_string(w.omega) << " = d(" << to_string(w.primitive)
                        << ")\n";
                else
                    out << "    witness: beta = " << to_string(w.beta) << " = d("
                        << to_string(w.primitive) << "), image = " << to_string(w.omega)
                        << " with nonzero class\n";
            }
        }
        out << "  overall: " << to_string(r.lefschetz->overall);
        if (r.lefschetz->first_fail_p >= 0)
            out << " (first failing degree " << r.lefschetz->first_fail_p << ")";
        out << "\n";
    }
    for (const StructureReport& s : d.structures) {
        out << "structure " << s.structure_name << ": contact metric "
            << (s.report.contact_metric ? "ok" : "FAILED") << "; K-contact: "
            << (s.report.k_contact ? "yes" : "no") << "; invariantly Sasakian: "
            << (s.report.invariant_sasakian ? "yes" : "no");
        if (!s.report.normality.zero && s.report.normality.first_nonzero) {
            const auto [i, jj] = *s.report.normality.first_nonzero;
            out << " (normality N(" << L.names()[i] << "," << L.names()[jj] << ") != 0)";
        }
        out << "\n";
        for (const AxiomResult& a : s.report.metric_report.axioms)
            if (!a.pass) {
                out << "  axiom " << a.id << " FAILED";
                if (a.counterexample)
                    out << " at (" << L.names()[a.counterexample->first] << ", "
                        << L.names()[a.counterexample->second] << ")";
                if (!a.detail.empty()) out << ": " << a.detail;
                out << "\n";
            }
    }
    if (d.model_report) {
        out << "coordinate model: group law "
            << (d.model_report->group.ok() ? "ok (unit and associativity exact)" : "FAILED")
            << "; coframe "
            << (d.model_report->structure.coframe_independent ? "independent" : "DEGENERATE")
            << "\n";
        bool inv = true;
        for (bool b : d.model_report->invariant) inv = inv && b;
        bool match = true;
        for (bool b : d.model_report->structure.equation_matches) match = match && b;
        out << "coordinate model: left invariance " << (inv ? "ok" : "FAILED")
            << "; structure equations " << (match ? "match" : "MISMATCH") << "\n";
    }
    out << "overall: " << to_string(d.overall) << "\n";
    if (d.overall == OverallOutcome::NON_SASAKIAN_CERTIFIED)
        out << "conclusion: the compact quotient carries no Sasakian metric compatible with "
               "the given contact form (sound certificate emitted)\n";
    else if (d.overall == OverallOutcome::LEFSCHETZ_INVARIANT_PASS)
        out << "conclusion: the invariant Lefschetz relation is an isomorphism in every "
               "degree; no obstruction from this test\n";
    else
        out << "conclusion: inconclusive\n";
    return out.str();
}

/// Exit-status contract for --expect.
inline bool expectation_matches(OverallOutcome overall, const std::string& expect) {
    if (expect == "certified") return overall == OverallOutcome::NON_SASAKIAN_CERTIFIED;
    if (expect == "pass") return overall == OverallOutcome::LEFSCHETZ_INVARIANT_PASS;
    if (expect == "inconclusive") return overall == OverallOutcome::INCONCLUSIVE;
    throw InputError("--expect: must be one of certified, pass, inconclusive");
}

}  // namespace hardlef
