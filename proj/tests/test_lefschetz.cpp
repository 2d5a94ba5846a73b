#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace hardlef;
using testutil::alpha;
using testutil::mono;

namespace {

const InvariantForm& find_beta(const std::vector<Witness>& ws, const InvariantForm& beta,
                               const Witness** out) {
    for (const Witness& w : ws)
        if (w.beta == beta) {
            *out = &w;
            return w.beta;
        }
    *out = nullptr;
    return beta;
}

}  // namespace

TEST_CASE("admissible spaces of the graded 5-dim algebra") {
    LieAlgebra L = testutil::ex5d();
    const InvariantForm eta = alpha(5, 5);

    AdmissibleSpace s0 = admissible_space(L, eta, 0);
    CHECK(s0.space.dim() == 1);  // the constants

    AdmissibleSpace s1 = admissible_space(L, eta, 1);
    REQUIRE(s1.space.dim() == 2);
    CHECK(s1.space.basis()[0] == form_coords(alpha(5, 1)));
    CHECK(s1.space.basis()[1] == form_coords(alpha(5, 2)));

    AdmissibleSpace s2 = admissible_space(L, eta, 2);
    CHECK(s2.space.dim() == 3);
    CHECK(s2.space.contains(form_coords(mono(5, {1, 2}))));
    CHECK(s2.space.contains(form_coords(mono(5, {1, 3}))));
    CHECK(s2.space.contains(form_coords(mono(5, {1, 4}) - mono(5, {2, 3}))));

    CHECK_THROWS_AS(admissible_space(L, eta, 3), InputError);
    CHECK_THROWS_AS(admissible_space(L, eta, -1), InputError);
}

TEST_CASE("admissible 1-forms of the graded 7-dim algebra") {
    LieAlgebra L = testutil::ex7d();
    AdmissibleSpace s1 = admissible_space(L, alpha(7, 7), 1);
    REQUIRE(s1.space.dim() == 4);
    for (int i : {1, 2, 5, 6}) CHECK(s1.space.contains(form_coords(alpha(7, i))));
}

TEST_CASE("admissible 2-forms of the 5-dim Heisenberg algebra") {
    LieAlgebra L = testutil::h5();
    AdmissibleSpace s2 = admissible_space(L, alpha(5, 5), 2);
    CHECK(s2.space.dim() == 5);
    CHECK(s2.space.contains(form_coords(mono(5, {1, 2}) - mono(5, {3, 4}))));
    for (auto idx : std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}})
        CHECK(s2.space.contains(form_coords(mono(5, idx))));
}

TEST_CASE("every relation generator image is closed, on every frozen example") {
    for (const LieAlgebra& L : testutil::all_frozen()) {
        const InvariantForm eta = testutil::top_covector(L);
        const int n = contact_n(L);
        for (int p = 0; p <= n; ++p) {
            CohomologySpace Hp(L, p), Hq(L, L.dim() - p);
            LefschetzRelationSpace rel = lefschetz_relation(L, eta, p, Hp, Hq);
            CHECK(rel.generators.size() == admissible_space(L, eta, p).space.dim());
            for (const RelationGenerator& gen : rel.generators) {
                CHECK(ce_d(L, gen.omega).is_zero());
                CHECK(gen.omega ==
                      wedge(wedge(eta, wedge_power(ce_d(L, eta), n - p)), gen.beta));
            }
        }
    }
}

TEST_CASE("the degree-1 relation pairs of the graded 5-dim algebra") {
    LieAlgebra L = testutil::ex5d();
    const InvariantForm eta = alpha(5, 5);
    CohomologySpace H1(L, 1), H4(L, 4);
    LefschetzRelationSpace rel = lefschetz_relation(L, eta, 1, H1, H4);
    REQUIRE(rel.generators.size() == 2);
    CHECK(rel.bp == 2);
    CHECK(rel.bq == 2);

    // eta ^ d eta ^ a1 = -a1^a2^a3^a5 and eta ^ d eta ^ a2 = a1^a2^a4^a5,
    // both exact, so both pairs land in (class, 0)
    CHECK(rel.generators[0].beta == alpha(5, 1));
    CHECK(rel.generators[0].omega == mono(5, {1, 2, 3, 5}, -1));
    CHECK(rel.generators[1].beta == alpha(5, 2));
    CHECK(rel.generators[1].omega == mono(5, {1, 2, 4, 5}));
    for (const RelationGenerator& gen : rel.generators) {
        CHECK(is_exact(L, gen.omega).has_value());
        CHECK(gen.pair[2] == 0);
        CHECK(gen.pair[3] == 0);
        CHECK_FALSE(testutil::is_zero(gen.pair));
    }
}

TEST_CASE("the 3-dim Heisenberg relation is the graph of a bijection") {
    LieAlgebra L = testutil::h3();
    const InvariantForm eta = alpha(3, 3);
    for (int p : {0, 1}) {
        CohomologySpace Hp(L, p), Hq(L, 3 - p);
        LefschetzRelationSpace rel = lefschetz_relation(L, eta, p, Hp, Hq);
        LefschetzVerdict v = lefschetz_verdict(L, rel, Hp, Hq);
        CHECK(v.outcome == Outcome::INVARIANT_PASS);
        CHECK(v.diag.dim_proj1 == Hp.dim());
        CHECK(v.diag.dim_proj2 == Hq.dim());
        CHECK(v.diag.dim_kernel_side == 0);
        CHECK(v.diag.dim_value_side == 0);
        CHECK(v.witnesses.empty());
    }
}

TEST_CASE("degree-1 sound failure of the graded 5-dim algebra") {
    LieAlgebra L = testutil::ex5d();
    const InvariantForm eta = alpha(5, 5);
    CohomologySpace H1(L, 1), H4(L, 4);
    LefschetzRelationSpace rel = lefschetz_relation(L, eta, 1, H1, H4);
    LefschetzVerdict v = lefschetz_verdict(L, rel, H1, H4);
    REQUIRE(v.outcome == Outcome::SOUND_FAIL);
    CHECK(v.diag.dim_kernel_side == 2);

    // the displayed witness: beta = a2 with eta ^ d eta ^ a2 = d(-a3^a4^a5)
    const Witness* w = nullptr;
    find_beta(v.witnesses, alpha(5, 2), &w);
    REQUIRE(w != nullptr);
    CHECK(w->kind == Witness::Kind::NonInjective);
    CHECK(w->omega == mono(5, {1, 2, 4, 5}));
    CHECK(w->primitive == mono(5, {3, 4, 5}, -1));
    CHECK(ce_d(L, w->primitive) == wedge(wedge(eta, ce_d(L, eta)), w->beta));
    CHECK(replay_witness(L, eta, 1, *w));
}

TEST_CASE("degree-2 functionality failure of the graded 5-dim algebra") {
    LieAlgebra L = testutil::ex5d();
    const InvariantForm eta = alpha(5, 5);
    CohomologySpace H2(L, 2), H3(L, 3);
    LefschetzRelationSpace rel = lefschetz_relation(L, eta, 2, H2, H3);
    LefschetzVerdict v = lefschetz_verdict(L, rel, H2, H3);
    REQUIRE(v.outcome == Outcome::SOUND_FAIL);

    const Witness* w = nullptr;
    find_beta(v.witnesses, mono(5, {1, 2}), &w);
    REQUIRE(w != nullptr);
    CHECK(w->kind == Witness::Kind::Functionality);
    CHECK(w->primitive == (Rational(-1) * alpha(5, 3)));  // a1^a2 = d(-a3)
    CHECK(w->omega == mono(5, {1, 2, 5}));
    CHECK_FALSE(is_exact(L, w->omega).has_value());
    CHECK(replay_witness(L, eta, 2, *w));
}

TEST_CASE("degree-1 sound failure of the graded 7-dim algebra") {
    LieAlgebra L = testutil::ex7d();
    const InvariantForm eta = alpha(7, 7);
    CohomologySpace H1(L, 1), H6(L, 6);
    LefschetzRelationSpace rel = lefschetz_relation(L, eta, 1, H1, H6);
    LefschetzVerdict v = lefschetz_verdict(L, rel, H1, H6);
    REQUIRE(v.outcome == Outcome::SOUND_FAIL);
    REQUIRE_FALSE(v.witnesses.empty());

    // the designated witness is beta = a1 with
    // eta ^ (d eta)^2 ^ a1 = -2 a1^a2^a3^a5^a6^a7 = d(2 a2^a4^a5^a6^a7)
    const Witness& w = v.witnesses.front();
    CHECK(w.kind == Witness::Kind::NonInjective);
    CHECK(w.beta == alpha(7, 1));
    CHECK(w.omega == mono(7, {1, 2, 3, 5, 6, 7}, -2));
    CHECK(w.primitive == mono(7, {2, 4, 5, 6, 7}, 2));
    CHECK(ce_d(L, w.primitive) == w.omega);
    CHECK(replay_witness(L, eta, 1, w));

    // the second closed covector fails the same way
    const Witness* w2 = nullptr;
    find_beta(v.witnesses, alpha(7, 2), &w2);
    REQUIRE(w2 != nullptr);
    CHECK(w2->omega == mono(7, {1, 2, 4, 5, 6, 7}, 2));
    CHECK(is_exact(L, w2->omega).has_value());
}

TEST_CASE("full reports across all degrees") {
    HardLefschetzReport r5 = hard_lefschetz_report(testutil::ex5d(), alpha(5, 5));
    CHECK(r5.overall == OverallOutcome::NON_SASAKIAN_CERTIFIED);
    CHECK(r5.first_fail_p == 1);
    CHECK(r5.verdicts.size() == 3);
    CHECK(r5.verdicts[0].outcome == Outcome::INVARIANT_PASS);

    HardLefschetzReport r7 = hard_lefschetz_report(testutil::ex7d(), alpha(7, 7));
    CHECK(r7.overall == OverallOutcome::NON_SASAKIAN_CERTIFIED);
    CHECK(r7.first_fail_p == 1);

    for (const LieAlgebra& L : {testutil::h3(), testutil::h5(), testutil::h7()}) {
        HardLefschetzReport r = hard_lefschetz_report(L, testutil::top_covector(L));
        CHECK(r.overall == OverallOutcome::LEFSCHETZ_INVARIANT_PASS);
        CHECK(r.first_fail_p == -1);
        for (const LefschetzVerdict& v : r.verdicts)
            CHECK(v.outcome == Outcome::INVARIANT_PASS);
    }
}

TEST_CASE("witness replay rejects tampered data") {
    LieAlgebra L = testutil::ex5d();
    const InvariantForm eta = alpha(5, 5);
    HardLefschetzReport rep = hard_lefschetz_report(L, eta);
    const Witness good = rep.verdicts[1].witnesses.front();
    REQUIRE(replay_witness(L, eta, 1, good));

    Witness bad = good;
    bad.primitive = Rational(-1) * bad.primitive;
    CHECK_FALSE(replay_witness(L, eta, 1, bad));

    bad = good;
    bad.omega = Rational(2) * bad.omega;
    CHECK_FALSE(replay_witness(L, eta, 1, bad));

    bad = good;
    bad.beta = alpha(5, 3);  // not closed
    CHECK_FALSE(replay_witness(L, eta, 1, bad));

    CHECK_FALSE(replay_witness(L, eta, 2, good));  // wrong degree
}

TEST_CASE("restoring the metric normalization factor changes no verdict") {
    for (const LieAlgebra& L : testutil::all_frozen()) {
        const InvariantForm eta = testutil::top_covector(L);
        const int n = contact_n(L);
        for (int p = 0; p <= n; ++p) {
            CohomologySpace Hp(L, p), Hq(L, L.dim() - p);
            LefschetzVerdict plain =
                lefschetz_verdict(L, lefschetz_relation(L, eta, p, Hp, Hq), Hp, Hq);
            Rational scale = 1;
            for (int i = 0; i < n - p; ++i) scale /= 2;
            LefschetzVerdict scaled =
                lefschetz_verdict(L, lefschetz_relation(L, eta, p, Hp, Hq, scale), Hp, Hq);
            CHECK(plain.outcome == scaled.outcome);
            CHECK(plain.diag == scaled.diag);
            CHECK(plain.witnesses.size() == scaled.witnesses.size());
            for (const Witness& w : scaled.witnesses)
                CHECK(replay_witness(L, eta, p, w, scale));
        }
    }
}

TEST_CASE("zero image scale is rejected") {
    LieAlgebra L = testutil::h3();
    CohomologySpace H0(L, 0), H3(L, 3);
    CHECK_THROWS_AS(lefschetz_relation(L, alpha(3, 3), 0, H0, H3, 0), InputError);
}

TEST_CASE("a parity-obstructed algebra never gets the invariant pass there") {
    // 5-dim nilpotent with b1 = 3: brackets [X1,X2] = X5, [X3,X4] = X5,
    // [X1,X3] = X2, contact form a5. Theorem-level consistency: an odd
    // Betti number at an odd degree p <= n rules out a Lefschetz pass.
    LieAlgebra L(5, {},
                 testutil::brackets(5, {{1, 2, 5, 1}, {3, 4, 5, 1}, {1, 3, 2, 1}}));
    REQUIRE(L.nilpotency().nilpotent);
    CHECK(betti_vector(L)[1] == 3);

    ParityReport parity = parity_report(L);
    REQUIRE(parity.obstruction);
    REQUIRE(parity.rows[1].required_even);
    CHECK_FALSE(parity.rows[1].satisfied);

    const InvariantForm eta = alpha(5, 5);
    REQUIRE(is_contact(L, eta).contact);
    HardLefschetzReport rep = hard_lefschetz_report(L, eta);
    for (const ParityRow& row : parity.rows)
        if (row.required_even && !row.satisfied && row.p <= contact_n(L))
            CHECK(rep.verdicts[row.p].outcome != Outcome::INVARIANT_PASS);
    // in fact the failure is sound and certified
    CHECK(rep.verdicts[1].outcome == Outcome::SOUND_FAIL);
    CHECK(rep.overall == OverallOutcome::NON_SASAKIAN_CERTIFIED);
}
