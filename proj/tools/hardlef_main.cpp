#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardlef/hardlef.hpp"

namespace {

using namespace hardlef;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write to " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    std::cout << "wrote " << out_path << "\n";
}

const InvariantForm& find_form(const AlgebraDocument& doc, const std::string& name) {
    auto it = doc.contact_forms.find(name);
    if (it == doc.contact_forms.end()) {
        std::string known;
        for (const auto& [k, v] : doc.contact_forms) known += (known.empty() ? "" : ", ") + k;
        throw InputError("unknown contact form \"" + name + "\"" +
                         (known.empty() ? " (the file declares none)" : " (declared: " + known + ")"));
    }
    return it->second;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json lefschetz_form_json(const Dossier& d, const ContactFormReport& r) {
    json full = dossier_to_json(d);
    return full["contact_forms"][r.form_name];
}

int run_validate(const std::string& file) {
    const AlgebraDocument doc = load_algebra_file(file);
    const LieAlgebra& L = doc.algebra;
    std::cout << "algebra: " << (doc.name.empty() ? "(unnamed)" : doc.name) << " (dim " << L.dim()
              << ")\n";
    std::cout << "jacobi: ok\n";
    const NilpotencyReport nil = L.nilpotency();
    std::cout << "nilpotent: " << (nil.nilpotent ? "yes" : "no") << "\n";
    if (L.grading()) std::cout << "grading: consistent\n";
    std::cout << "contact forms: " << doc.contact_forms.size()
              << "; structures: " << doc.structures.size() << "\n";
    if (doc.model) {
        const CoordinateModelReport rep = verify_coordinate_model(*doc.model, L);
        if (!rep.group.ok())
            throw InputError("coordinate model: the group law fails unit or associativity");
        for (std::size_t i = 0; i < rep.invariant.size(); ++i)
            if (!rep.invariant[i])
                throw InputError("coordinate model: coframe entry " + std::to_string(i + 1) +
                                 " is not left-invariant");
        if (!rep.structure.ok())
            throw InputError("coordinate model: structure equations do not match the brackets");
        std::cout << "coordinate model: ok\n";
    }
    return 0;
}

int run_betti(const std::string& file, const std::string& format) {
    const AlgebraDocument doc = load_algebra_file(file);
    const LieAlgebra& L = doc.algebra;
    const auto betti = betti_vector(L);
    if (format == "json") {
        json j;
        j["betti"] = betti;
        if (L.dim() % 2 == 1) {
            const ParityReport rep = parity_report(L);
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"p", row.p},
                                {"b", row.b},
                                {"required_even", row.required_even},
                                {"satisfied", row.satisfied}});
            j["parity"] = {{"n", rep.n}, {"rows", rows}, {"obstruction", rep.obstruction}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "betti:";
    for (std::size_t b : betti) std::cout << " " << b;
    std::cout << "\n";
    long euler = 0;
    for (std::size_t k = 0; k < betti.size(); ++k)
        euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti[k]);
    std::cout << "euler characteristic: " << euler << "\n";
    if (L.dim() % 2 == 1) {
        const ParityReport rep = parity_report(L);
        std::cout << "parity obstruction: " << (rep.obstruction ? "yes" : "none") << "\n";
    }
    return 0;
}

int run_contact(const std::string& file, const std::string& form) {
    const AlgebraDocument doc = load_algebra_file(file);
    const InvariantForm& eta = find_form(doc, form);
    const ContactCheck check = is_contact(doc.algebra, eta);
    if (!check.contact) {
        std::cout << "contact: no\n";
        return 0;
    }
    std::cout << "contact: yes\n";
    std::cout << "volume: " << to_string(check.volume) << "\n";
    std::cout << "reeb: " << detail::render_vector(reeb(doc.algebra, eta), doc.algebra.names())
              << "\n";
    return 0;
}

int run_lefschetz(const std::string& file, const std::string& form, std::optional<int> p,
                  const std::string& format, const std::string& expect,
                  const std::string& out_path) {
    const AlgebraDocument doc = load_algebra_file(file);
    const InvariantForm& eta = find_form(doc, form);
    const LieAlgebra& L = doc.algebra;
    if (!is_contact(L, eta).contact) throw InputError("form \"" + form + "\" is not contact");

    if (p) {
        const CohomologySpace Hp = cohomology(L, *p);
        const CohomologySpace Hq = cohomology(L, L.dim() - *p);
        const auto rel = lefschetz_relation(L, eta, *p, Hp, Hq);
        const LefschetzVerdict v = lefschetz_verdict(L, rel, Hp, Hq);
        if (format == "json") {
            json j;
            j["p"] = v.p;
            j["outcome"] = to_string(v.outcome);
            json certs = json::array();
            for (const Witness& w : v.witnesses)
                certs.push_back(certificate_to_json(doc, form, eta, v.p, w));
            j["certificates"] = std::move(certs);
            emit(j.dump(2), out_path);
        } else {
            std::ostringstream text;
            text << "lefschetz p=" << v.p << ": " << to_string(v.outcome) << "\n";
            for (const Witness& w : v.witnesses)
                text << "  witness: beta = " << to_string(w.beta)
                     << ", image = " << to_string(w.omega) << ", primitive = "
                     << to_string(w.primitive) << "\n";
            emit(text.str(), out_path);
        }
        if (!expect.empty()) {
            const bool match =
                (expect == "certified" && v.outcome == Outcome::SOUND_FAIL) ||
                (expect == "pass" && v.outcome == Outcome::INVARIANT_PASS) ||
                (expect == "inconclusive" && v.outcome == Outcome::INCONCLUSIVE);
            if (expect != "certified" && expect != "pass" && expect != "inconclusive")
                throw InputError("--expect: must be one of certified, pass, inconclusive");
            return match ? 0 : 1;
        }
        return 0;
    }

    Dossier d = run_dossier(doc);
    const ContactFormReport* rep = nullptr;
    for (const ContactFormReport& r : d.contact_forms)
        if (r.form_name == form) rep = &r;
    internal_check(rep != nullptr, "lefschetz: dossier lost the requested form");
    if (format == "json") {
        emit(lefschetz_form_json(d, *rep).dump(2), out_path);
    } else {
        std::ostringstream text;
        for (const LefschetzVerdict& v : rep->lefschetz->verdicts) {
            text << "lefschetz p=" << v.p << ": " << to_string(v.outcome) << "\n";
            for (const Witness& w : v.witnesses)
                text << "  witness: beta = " << to_string(w.beta)
                     << ", image = " << to_string(w.omega) << ", primitive = "
                     << to_string(w.primitive) << "\n";
        }
        text << "overall: " << to_string(rep->lefschetz->overall) << "\n";
        emit(text.str(), out_path);
    }
    if (!expect.empty()) return expectation_matches(rep->lefschetz->overall, expect) ? 0 : 1;
    return 0;
}

int run_kcontact(const std::string& file, const std::string& structure,
                 const std::string& format) {
    const AlgebraDocument doc = load_algebra_file(file);
    auto it = doc.structures.find(structure);
    if (it == doc.structures.end())
        throw InputError("unknown structure \"" + structure + "\"");
    const InvariantForm& eta = doc.contact_forms.at(it->second.eta);
    const KContactReport rep = k_contact_report(doc.algebra, eta, it->second.tensors);
    if (format == "json") {
        Dossier d = run_dossier(doc);
        json j = dossier_to_json(d);
        std::cout << j["structures"][structure].dump(2) << "\n";
        return 0;
    }
    std::cout << "contact metric: " << (rep.contact_metric ? "yes" : "no") << "\n";
    for (const AxiomResult& a : rep.metric_report.axioms)
        std::cout << "  axiom " << a.id << ": " << (a.pass ? "ok" : "FAILED") << "\n";
    std::cout << "k-contact (reeb is killing): " << (rep.k_contact ? "yes" : "no") << "\n";
    std::cout << "normality tensor zero: " << (rep.normality.zero ? "yes" : "no") << "\n";
    std::cout << "invariantly sasakian: " << (rep.invariant_sasakian ? "yes" : "no") << "\n";
    return 0;
}

int run_single_dossier(const AlgebraDocument& doc, const std::string& format,
                       const std::string& expect, const std::string& out_path) {
    const Dossier d = run_dossier(doc);
    emit(format == "json" ? dossier_to_json(d).dump(2) : dossier_to_text(d), out_path);
    if (!expect.empty()) return expectation_matches(d.overall, expect) ? 0 : 1;
    return 0;
}

int run_catalog_run(const std::string& name, bool all, const std::string& format,
                    const std::string& expect) {
    if (all == !name.empty())
        throw InputError("catalog run: pass exactly one of --all or an entry name");
    if (!all) return run_single_dossier(catalog_entry(name), format, expect, "");
    if (!expect.empty())
        throw InputError("catalog run: --expect applies to a single entry");
    std::vector<std::future<Dossier>> jobs;
    for (const std::string& n : catalog_names())
        jobs.push_back(std::async(std::launch::async,
                                  [n] { return run_dossier(catalog_entry(n)); }));
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Dossier d = jobs[i].get();
        if (format == "json") {
            std::cout << dossier_to_json(d).dump(2) << "\n";
        } else {
            if (i) std::cout << "\n";
            std::cout << dossier_to_text(d);
        }
    }
    return 0;
}

int run_verify_certificate(const std::string& file) {
    const json j = load_json_file(file);
    const std::vector<json> certs = collect_certificates(j);
    for (const json& c : certs) std::cout << verify_certificate_json(c) << "\n";
    std::cout << "verified " << certs.size() << " certificate(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contact and Lefschetz analysis of nilpotent Lie algebras"};
    app.require_subcommand(1);

    std::string file, form, structure, format = "text", expect, out_path, catalog_name;
    std::optional<int> degree;
    bool run_all = false;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate an algebra file");
    validate->add_option("file", file)->required();

    CLI::App* betti = app.add_subcommand("betti", "betti numbers and the parity report");
    betti->add_option("file", file)->required();
    betti->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* contact = app.add_subcommand("contact", "contact check, volume, and reeb vector");
    contact->add_option("file", file)->required();
    contact->add_option("--form", form)->required();

    CLI::App* lefschetz =
        app.add_subcommand("lefschetz", "lefschetz relation verdicts and certificates");
    lefschetz->add_option("file", file)->required();
    lefschetz->add_option("--form", form)->required();
    lefschetz->add_option("--p", degree);
    lefschetz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    lefschetz->add_option("--expect", expect);
    lefschetz->add_option("--out", out_path);

    CLI::App* kcontact = app.add_subcommand("kcontact", "contact metric and K-contact axioms");
    kcontact->add_option("file", file)->required();
    kcontact->add_option("--structure", structure)->required();
    kcontact->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* dossier = app.add_subcommand("dossier", "full report for one algebra file");
    dossier->add_option("file", file)->required();
    dossier->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    dossier->add_option("--expect", expect);
    dossier->add_option("--out", out_path);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in algebra catalog");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list catalog entries");
    CLI::App* cat_get = catalog->add_subcommand("get", "print one entry as an algebra file");
    cat_get->add_option("name", catalog_name)->required();
    cat_get->add_option("--out", out_path);
    CLI::App* cat_run = catalog->add_subcommand("run", "run dossiers for catalog entries");
    cat_run->add_option("name", catalog_name);
    cat_run->add_flag("--all", run_all);
    cat_run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cat_run->add_option("--expect", expect);

    CLI::App* verify =
        app.add_subcommand("verify-certificate", "replay certificates from a file or dossier");
    verify->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(file);
        if (betti->parsed()) return run_betti(file, format);
        if (contact->parsed()) return run_contact(file, form);
        if (lefschetz->parsed())
            return run_lefschetz(file, form, degree, format, expect, out_path);
        if (kcontact->parsed()) return run_kcontact(file, structure, format);
        if (dossier->parsed())
            return run_single_dossier(load_algebra_file(file), format, expect, out_path);
        if (catalog->parsed()) {
            if (cat_list->parsed()) {
                for (const std::string& n : catalog_names()) {
                    const AlgebraDocument doc = catalog_entry(n);
                    std::cout << n << "  dim " << doc.algebra.dim() << "  contact forms:";
                    for (const auto& [fname, f] : doc.contact_forms) std::cout << " " << fname;
                    std::cout << "\n";
                }
                return 0;
            }
            if (cat_get->parsed()) {
                emit(serialize_algebra_document(catalog_entry(catalog_name)), out_path);
                return 0;
            }
            if (cat_run->parsed())
                return run_catalog_run(catalog_name, run_all, format, expect);
        }
        if (verify->parsed()) return run_verify_certificate(file);
        throw InternalError("no subcommand dispatched");
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
