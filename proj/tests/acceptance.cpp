// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracle.hpp"

using namespace hardlef;
using testutil::alpha;
using testutil::mono;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

void run(int id, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] " << id << ": " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] " << id << ": " << label << " -- " << e.what() << "\n";
    }
}

const Witness* find_witness(const std::vector<Witness>& ws, const InvariantForm& beta) {
    for (const Witness& w : ws)
        if (w.beta == beta) return &w;
    return nullptr;
}

LefschetzVerdict verdict_at(const LieAlgebra& L, const InvariantForm& eta, int p,
                            const Rational& scale = 1) {
    CohomologySpace Hp(L, p), Hq(L, L.dim() - p);
    return lefschetz_verdict(L, lefschetz_relation(L, eta, p, Hp, Hq, scale), Hp, Hq);
}

}  // namespace

int main() {
    run(1, "5-dim graded example is contact with volume 2 a1^a2^a3^a4^a5 and Reeb X5", [] {
        const LieAlgebra L = catalog_entry("paper-ex5d").algebra;
        const InvariantForm eta = alpha(5, 5);
        const ContactCheck c = is_contact(L, eta);
        check(c.contact, "eta is not contact");
        check(c.volume == mono(5, {1, 2, 3, 4, 5}, 2), "wrong contact volume");
        check(reeb(L, eta) == testutil::basis_vector(5, 5), "wrong Reeb vector");
    });

    run(2, "its first cohomology has dimension 2 with representatives a1, a2", [] {
        const LieAlgebra L = catalog_entry("paper-ex5d").algebra;
        check(betti_vector(L)[1] == 2, "b1 != 2");
        const std::vector<InvariantForm> reps = CohomologySpace(L, 1).representatives();
        check(reps.size() == 2, "wrong number of degree-1 representatives");
        check(reps[0] == alpha(5, 1) && reps[1] == alpha(5, 2), "unexpected representatives");
    });

    run(3, "its degree-1 verdict is SOUND_FAIL witnessed by beta = a2, eta^(d eta)^beta exact",
        [] {
            const LieAlgebra L = catalog_entry("paper-ex5d").algebra;
            const InvariantForm eta = alpha(5, 5);
            const LefschetzVerdict v = verdict_at(L, eta, 1);
            check(v.outcome == Outcome::SOUND_FAIL, "verdict is not SOUND_FAIL");
            const Witness* w = find_witness(v.witnesses, alpha(5, 2));
            check(w != nullptr, "no witness with beta = a2");
            check(w->kind == Witness::Kind::NonInjective, "wrong witness kind");
            check(w->omega == mono(5, {1, 2, 4, 5}), "wrong image form");
            check(w->primitive == mono(5, {3, 4, 5}, -1), "wrong primitive");
            check(ce_d(L, w->primitive) == wedge(wedge(eta, ce_d(L, eta)), w->beta),
                  "stated identity does not hold");
            check(replay_witness(L, eta, 1, *w), "witness replay failed");
        });

    run(4, "7-dim graded example has b1 = 4 and b3 = 8", [] {
        const std::vector<std::size_t> b = betti_vector(catalog_entry("paper-ex7d").algebra);
        check(b[1] == 4, "b1 != 4");
        check(b[3] == 8, "b3 != 8");
    });

    run(5, "its degree-1 witness is beta = a1 with eta^(d eta)^2^a1 = 2 d(a2^a4^a5^a6^a7)", [] {
        const LieAlgebra L = catalog_entry("paper-ex7d").algebra;
        const InvariantForm eta = alpha(7, 7);
        const LefschetzVerdict v = verdict_at(L, eta, 1);
        check(v.outcome == Outcome::SOUND_FAIL, "verdict is not SOUND_FAIL");
        const Witness* w = find_witness(v.witnesses, alpha(7, 1));
        check(w != nullptr, "no witness with beta = a1");
        const InvariantForm lhs = wedge(wedge(eta, wedge_power(ce_d(L, eta), 2)), w->beta);
        check(lhs == mono(7, {1, 2, 3, 5, 6, 7}, -2), "image is not -2 a1^a2^a3^a5^a6^a7");
        check(w->omega == lhs, "stored image disagrees");
        check(w->primitive == mono(7, {2, 4, 5, 6, 7}, 2), "wrong primitive");
        check(ce_d(L, w->primitive) == lhs, "stated identity does not hold");
    });

    run(6, "both graded examples carry all contact metric axioms, are K-contact, Reeb central",
        [] {
            for (const std::string& name :
                 {std::string("paper-ex5d"), std::string("paper-ex7d")}) {
                const AlgebraDocument doc = catalog_entry(name);
                const NamedStructure& ns = doc.structures.begin()->second;
                const InvariantForm& eta = doc.contact_forms.at(ns.eta);
                const KContactReport r = k_contact_report(doc.algebra, eta, ns.tensors);
                check(r.contact_metric, name + ": a contact metric axiom fails");
                check(r.k_contact, name + ": not K-contact");
                check(doc.algebra.center().contains(r.metric_report.xi),
                      name + ": Reeb vector is not central");
            }
        });

    run(7, "both pass every parity requirement yet are certified non-Sasakian", [] {
        for (const std::string& name : {std::string("paper-ex5d"), std::string("paper-ex7d")}) {
            const LieAlgebra L = catalog_entry(name).algebra;
            check(!parity_report(L).obstruction, name + ": unexpected parity obstruction");
            const InvariantForm eta = InvariantForm::basis_one_form(L.dim(), L.dim() - 1);
            check(hard_lefschetz_report(L, eta).overall ==
                      OverallOutcome::NON_SASAKIAN_CERTIFIED,
                  name + ": overall outcome is not NON_SASAKIAN_CERTIFIED");
        }
    });

    run(8, "both coordinate models verify exactly: group law, invariance, structure equations",
        [] {
            for (const std::string& name :
                 {std::string("paper-ex5d"), std::string("paper-ex7d")}) {
                const AlgebraDocument doc = catalog_entry(name);
                check(doc.model.has_value(), name + ": no model bundled");
                const CoordinateModelReport r = verify_coordinate_model(*doc.model, doc.algebra);
                check(r.group.ok(), name + ": group law fails");
                for (bool b : r.invariant) check(b, name + ": a coframe entry is not invariant");
                check(r.structure.ok(), name + ": structure equations fail");
            }
        });

    run(9, "d^2 = 0, graded commutativity, interior antiderivation on 100 random forms each",
        [] {
            std::mt19937 g(424242);
            for (const std::string& name : catalog_names()) {
                const LieAlgebra L = catalog_entry(name).algebra;
                const int n = L.dim();
                std::uniform_int_distribution<int> kd(0, n), kpos(1, n);
                for (int trial = 0; trial < 100; ++trial) {
                    const int ka = kd(g), kb = kd(g);
                    const InvariantForm a = testutil::rand_form(g, n, ka);
                    const InvariantForm b = testutil::rand_form(g, n, kb);
                    check(ce_d(L, ce_d(L, a)).is_zero(), name + ": d(d a) != 0");
                    const InvariantForm ab = wedge(a, b);
                    const Rational sign = (ka * kb) % 2 == 0 ? 1 : -1;
                    check(ab == sign * wedge(b, a), name + ": graded commutativity fails");

                    const int kc = kpos(g), ke = kpos(g);
                    const InvariantForm c = testutil::rand_form(g, n, kc);
                    const InvariantForm e = testutil::rand_form(g, n, ke);
                    const QVector v = testutil::rand_vector(g, n);
                    const Rational s = kc % 2 == 0 ? 1 : -1;
                    check(interior(v, wedge(c, e)) ==
                              wedge(interior(v, c), e) + s * wedge(c, interior(v, e)),
                          name + ": interior antiderivation law fails");
                }
            }
        });

    run(10, "Poincare duality and zero Euler characteristic on every catalog entry", [] {
        for (const std::string& name : catalog_names()) {
            const std::vector<std::size_t> b = betti_vector(catalog_entry(name).algebra);
            long euler = 0;
            for (std::size_t k = 0; k < b.size(); ++k) {
                check(b[k] == b[b.size() - 1 - k], name + ": duality fails");
                euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b[k]);
            }
            check(euler == 0, name + ": nonzero Euler characteristic");
        }
    });

    run(11, "Heisenberg entries are invariantly Sasakian and pass every Lefschetz degree", [] {
        const AlgebraDocument h3 = catalog_entry("heisenberg3");
        const NamedStructure& ns = h3.structures.begin()->second;
        const KContactReport r =
            k_contact_report(h3.algebra, h3.contact_forms.at(ns.eta), ns.tensors);
        check(r.invariant_sasakian, "heisenberg3 is not invariantly Sasakian");
        check(r.normality.zero, "heisenberg3 normality tensor is nonzero");
        for (const std::string& name :
             {std::string("heisenberg3"), std::string("heisenberg5"),
              std::string("heisenberg7")}) {
            const LieAlgebra L = catalog_entry(name).algebra;
            const HardLefschetzReport rep =
                hard_lefschetz_report(L, InvariantForm::basis_one_form(L.dim(), L.dim() - 1));
            check(rep.overall == OverallOutcome::LEFSCHETZ_INVARIANT_PASS,
                  name + ": overall outcome is not LEFSCHETZ_INVARIANT_PASS");
            for (const LefschetzVerdict& v : rep.verdicts)
                check(v.outcome == Outcome::INVARIANT_PASS,
                      name + ": SOUND_FAIL or INCONCLUSIVE on a Heisenberg algebra");
        }
    });

    run(12, "restoring the metric image normalization (1/2)^(n-p) changes no verdict", [] {
        for (const std::string& name : catalog_names()) {
            const LieAlgebra L = catalog_entry(name).algebra;
            const InvariantForm eta = InvariantForm::basis_one_form(L.dim(), L.dim() - 1);
            for (int p = 0; p <= contact_n(L); ++p) {
                Rational scale = 1;
                for (int i = 0; i < contact_n(L) - p; ++i) scale /= 2;
                const LefschetzVerdict plain = verdict_at(L, eta, p);
                const LefschetzVerdict scaled = verdict_at(L, eta, p, scale);
                check(plain.outcome == scaled.outcome, name + ": outcome changed under scaling");
                check(plain.diag == scaled.diag, name + ": diagnostics changed under scaling");
            }
        }
    });

    run(13, "every emitted certificate replays through the independent verifier", [] {
        std::size_t total = 0;
        for (const std::string& name : catalog_names()) {
            const json j = dossier_to_json(run_dossier(catalog_entry(name)));
            const std::vector<json> certs = collect_certificates(j);
            for (const json& c : certs) verify_certificate_json(c);
            if (name == "paper-ex5d" || name == "paper-ex7d")
                check(!certs.empty(), name + ": no certificates emitted");
            total += certs.size();
        }
        check(total > 0, "no certificates emitted at all");
    });

    if (failures == 0) {
        std::cout << "acceptance: all 13 criteria hold\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
