#include <catch2/catch_amalgamated.hpp>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;

void expect_no_fails(const VerificationReport& r) {
    for (const auto& e : r.entries) {
        INFO(r.suite + " :: " + e.name + "  " + e.residual);
        CHECK(e.verdict != Verdict::fails);
    }
}
}  // namespace

TEST_CASE("Ohn suite on deform_slN(., 2) in three spins") {
    const auto p = builtin("ohn_sl2");
    for (const char* lbl : {"spin-1/2", "spin-1", "spin-3/2"}) {
        INFO(lbl);
        const auto set = deform_slN(classical_rep("sl2", lbl, &ctx), 2);
        const auto r = verify_relations(p, assignment_from(set));
        expect_no_fails(r);
        CHECK(r.count(Verdict::holds_with_variant) == 0);  // Ohn list is clean
    }
}

TEST_CASE("sl(3): Prop-1 list and Chevalley form on fund and adjoint") {
    for (const char* rep : {"fund", "adjoint"}) {
        INFO(rep);
        const auto set = deform_slN(classical_rep("sl3", rep, &ctx), 3);
        const auto r1 = verify_relations(builtin("uh_sl3"), assignment_from(set));
        expect_no_fails(r1);
        // the two F-F3 lines hold only through the documented variant
        int variants = 0;
        for (const auto& e : r1.entries)
            if (e.verdict == Verdict::holds_with_variant) ++variants;
        CHECK(variants == 2);
        const auto r2 = verify_relations(builtin("uh_sl3_chevalley"), assignment_from(set));
        expect_no_fails(r2);
        CHECK(r2.count(Verdict::holds_with_variant) == 0);
    }
}

TEST_CASE("Prop-3 suites for N = 2..5 on fundamentals") {
    for (int N = 2; N <= 5; ++N) {
        INFO(N);
        const auto rep = classical_rep("sl" + std::to_string(N), "fund", &ctx);
        const auto set = deform_slN(rep, N);
        const auto r = verify_relations(builtin("uh_slN_" + std::to_string(N)),
                                        assignment_from(set));
        expect_no_fails(r);
        CHECK(r.count(Verdict::holds_with_variant) == (N == 2 ? 1 : 0));
    }
}

TEST_CASE("super-Jordanian osp list in j = 1/2, 1, 3/2") {
    const auto p = builtin("uh_osp12_super");
    for (const char* lbl : {"j=1/2", "j=1", "j=3/2"}) {
        INFO(lbl);
        const auto set = deform_osp_super(classical_rep("osp12", lbl, &ctx));
        const auto r = verify_relations(p, assignment_from(set));
        expect_no_fails(r);
    }
    // the [H,Y] variant is exercised at j >= 1 (at j = 1/2 the printed form
    // happens to hold in the small representation)
    const auto r1 = verify_relations(
        p, assignment_from(deform_osp_super(classical_rep("osp12", "j=1", &ctx))));
    int variants = 0;
    for (const auto& e : r1.entries)
        if (e.verdict == Verdict::holds_with_variant) ++variants;
    CHECK(variants == 1);
}

TEST_CASE("Jordanian osp list on both map variants in j = 1/2, 1") {
    const auto p = builtin("uh_osp12_jordanian");
    for (auto v : {JordanianVariant::minimal, JordanianVariant::hdiag}) {
        for (const char* lbl : {"j=1/2", "j=1"}) {
            INFO(lbl);
            const auto set = deform_osp_jordanian(classical_rep("osp12", lbl, &ctx), v);
            const auto r = verify_relations(p, assignment_from(set));
            expect_no_fails(r);
            CHECK(r.count(Verdict::holds_with_variant) == 0);  // list is clean
        }
    }
}

TEST_CASE("sl(2|1) list on fundamental and graded adjoint") {
    const auto p = builtin("uh_sl21");
    for (const char* rep : {"fund", "adjoint"}) {
        INFO(rep);
        const auto set = deform_sl21(classical_rep("sl21", rep, &ctx));
        const auto r = verify_relations(p, assignment_from(set));
        expect_no_fails(r);
    }
}

TEST_CASE("uq presentations verify on the q-reps") {
    expect_no_fails(verify_relations(builtin("uq_osp12"),
                                     assignment_from(q_rep("osp12", "j=1", &ctx))));
    expect_no_fails(verify_relations(builtin("uq_sl21"),
                                     assignment_from(q_rep("sl21", "fund", &ctx))));
}

TEST_CASE("Hopf axioms for U_h(sl(2)) on spin-1/2") {
    const auto set = deform_slN(classical_rep("sl2", "spin-1/2", &ctx), 2);
    const auto r = verify_coalgebra(builtin("ohn_sl2"), assignment_from(set));
    expect_no_fails(r);
    // all four axiom families represented
    int hom = 0, co = 0, cu = 0, an = 0;
    for (const auto& e : r.entries) {
        hom += e.name.rfind("hom:", 0) == 0;
        co += e.name.rfind("coassoc:", 0) == 0;
        cu += e.name.rfind("counit:", 0) == 0;
        an += e.name.rfind("antipode:", 0) == 0;
    }
    CHECK(hom == 3);
    CHECK(co == 5);
    CHECK(cu == 5);
    CHECK(an == 5);
}

TEST_CASE("Hopf axioms for U_h(sl(3)) and U_h(sl(4)) on fundamentals") {
    expect_no_fails(verify_coalgebra(
        builtin("uh_sl3"),
        assignment_from(deform_slN(classical_rep("sl3", "fund", &ctx), 3))));
    expect_no_fails(verify_coalgebra(
        builtin("uh_slN_4"),
        assignment_from(deform_slN(classical_rep("sl4", "fund", &ctx), 4))));
}

TEST_CASE("Hopf axioms for both osp variants on j=1/2") {
    expect_no_fails(verify_coalgebra(
        builtin("uh_osp12_super"),
        assignment_from(deform_osp_super(classical_rep("osp12", "j=1/2", &ctx)))));
    expect_no_fails(verify_coalgebra(
        builtin("uh_osp12_jordanian"),
        assignment_from(deform_osp_jordanian(classical_rep("osp12", "j=1/2", &ctx),
                                             JordanianVariant::minimal))));
}

TEST_CASE("Hopf axioms for U_h(sl(2|1)) on the fundamental") {
    const auto r = verify_coalgebra(
        builtin("uh_sl21"),
        assignment_from(deform_sl21(classical_rep("sl21", "fund", &ctx))));
    expect_no_fails(r);
    // Delta(H3) and S(F3) are ledgered typos: their axiom entries carry variants
    bool h3_variant = false, f3_variant = false;
    for (const auto& e : r.entries) {
        if (e.name == "coassoc:H3" && e.verdict == Verdict::holds_with_variant)
            h3_variant = true;
        if (e.name == "antipode:F3" && e.verdict == Verdict::holds_with_variant)
            f3_variant = true;
    }
    CHECK(h3_variant);
    CHECK(f3_variant);
}

TEST_CASE("ledger: unknown failures stay failures, variants report notes") {
    // an intentionally wrong presentation fails without a ledger entry
    const auto p = parse_presentation(
        "algebra broken;\n"
        "generator A even;\n"
        "generator B even;\n"
        "relation bad: [A, B] - A;\n");
    const Representation f = classical_rep("sl2", "spin-1/2", &ctx);
    GeneratorAssignment a;
    a.ctx = &ctx;
    a.matrices["A"] = f.gen("J0");
    a.matrices["B"] = f.gen("J0");
    const auto r = verify_relations(p, a);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].verdict == Verdict::fails);
    CHECK(!r.entries[0].residual.empty());
}

TEST_CASE("automorphism Phi of U_h(sl(2|1))") {
    const auto p = builtin("uh_sl21");
    const auto set = deform_sl21(classical_rep("sl21", "fund", &ctx));
    std::map<std::string, ExprPtr> phi;
    phi["T"] = parse_expression("T");
    phi["Tinv"] = parse_expression("Tinv");
    phi["Thalf"] = parse_expression("Thalf");
    phi["Thalfinv"] = parse_expression("Thalfinv");
    phi["F1"] = parse_expression("F1");
    phi["H1"] = parse_expression("H1");
    phi["E2"] = parse_expression("F3");
    phi["F2"] = parse_expression("-E3");
    phi["H2"] = parse_expression("-H3");
    phi["E3"] = parse_expression("-F2");
    phi["F3"] = parse_expression("E2");
    phi["H3"] = parse_expression("-H2");
    const auto r = automorphism_check(phi, p, assignment_from(set));
    for (const auto& e : r.entries) {
        INFO(e.name + " " + e.residual);
        CHECK(e.verdict != Verdict::fails);
    }
    // identity table trivially holds
    std::map<std::string, ExprPtr> id;
    for (const auto& g : p.generators) id[g.name] = parse_expression(g.name);
    const auto r2 = automorphism_check(id, p, assignment_from(set));
    for (const auto& e : r2.entries) CHECK(e.verdict != Verdict::fails);
    // classical automorphism on the classical suite
    const auto pc = builtin("classical_sl21");
    const Representation cf = classical_rep("sl21", "fund", &ctx);
    std::map<std::string, ExprPtr> phic;
    phic["E1"] = parse_expression("E1");
    phic["F1"] = parse_expression("F1");
    phic["H1"] = parse_expression("H1");
    phic["E2"] = parse_expression("F3");
    phic["F2"] = parse_expression("-E3");
    phic["H2"] = parse_expression("-H1 - H2");  // phi(h2) = -h3
    phic["E3"] = parse_expression("-F2");
    phic["F3"] = parse_expression("E2");
    const auto r3 = automorphism_check(phic, pc, assignment_from(cf));
    for (const auto& e : r3.entries) {
        INFO(e.name + " " + e.residual);
        CHECK(e.verdict != Verdict::fails);
    }
}
