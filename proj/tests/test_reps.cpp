#include <catch2/catch_amalgamated.hpp>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;

// every relation of a presentation vanishes under the assignment
void check_suite(const std::string& pres, const GeneratorAssignment& a) {
    const VerificationReport r = verify_relations(builtin(pres), a);
    for (const auto& e : r.entries) {
        INFO(pres + ":" + e.name + " " + e.residual);
        CHECK(e.verdict != Verdict::fails);
    }
}
}  // namespace

TEST_CASE("sl(2) spin-j catalog reps") {
    for (int twoj = 1; twoj <= 6; ++twoj) {
        const Rational j = rat(twoj, 2);
        const Representation c = sl2_rep(j, &ctx, false);
        const Representation q = sl2_rep(j, &ctx, true);
        // classical: [J0, J+-] = +-2 J+-, [J+, J-] = J0
        CHECK(super_bracket(c.gen("J0"), c.gen("Jp")) == c.gen("Jp") * Scalar::from_int(2, &ctx));
        CHECK(super_bracket(c.gen("Jp"), c.gen("Jm")) == c.gen("J0"));
        // q: q^{J0} J+- = J+- q^{J0 +- 2}
        CHECK(q.gen("qJ0") * q.gen("Jp") ==
              q.gen("Jp") * q.gen("qJ0") * Scalar::q_power(2, &ctx));
        // [J+, J-] = [J0]_q: diagonal with [2m]_q entries
        GradedMatrix want(q.dim, q.parity, &ctx);
        for (int i = 0; i < q.dim; ++i)
            want.at(i, i) = qnumber(QNumberKind::bracket,
                                    q.gen("J0").at(i, i).rational_value(), &ctx);
        CHECK(super_bracket(q.gen("Jp"), q.gen("Jm")) == want);
        // limit of the q-rep is the classical rep
        CHECK(q.gen("Jm").limit_q1() == c.gen("Jm"));
        // positive root nilpotent
        CHECK(c.gen("Jp").nilpotency_index() == twoj + 1);
    }
    // fundamental is undeformed
    const Representation f = sl2_rep(rat(1, 2), &ctx, false);
    CHECK(f.gen("Jp") == GradedMatrix::unit(2, 0, 1, {0, 0}, &ctx));
    CHECK(f.gen("Jm") == GradedMatrix::unit(2, 1, 0, {0, 0}, &ctx));
}

TEST_CASE("sl(N) fundamentals pass the classical suite") {
    for (int N = 2; N <= 6; ++N) {
        const Representation r = slN_fund(N, &ctx, false);
        check_suite("classical_slN_" + std::to_string(N), assignment_from(r));
    }
}

TEST_CASE("osp(1|2) q-reps and their classical limits") {
    for (int twoj = 1; twoj <= 3; ++twoj) {
        const Rational j = rat(twoj, 2);
        const Representation q = osp12_rep(j, &ctx, true);
        CHECK(q.dim == 2 * twoj + 1);
        // q-relations: [h,e] = e, [h,f] = -f, {e,f} = -[h]_q
        CHECK(super_bracket(q.gen("H"), q.gen("E")) == q.gen("E"));
        CHECK(super_bracket(q.gen("H"), q.gen("F")) == -q.gen("F"));
        GradedMatrix want(q.dim, q.parity, &ctx);
        for (int i = 0; i < q.dim; ++i)
            want.at(i, i) = -qnumber(QNumberKind::bracket,
                                     q.gen("H").at(i, i).rational_value(), &ctx);
        CHECK(super_bracket(q.gen("E"), q.gen("F")) == want);
        // classical = limit; classical suite holds
        const Representation c = osp12_rep(j, &ctx, false);
        CHECK(q.gen("F").limit_q1() == c.gen("F"));
        check_suite("classical_osp12", assignment_from(c));
        // e^2 nilpotent (series precondition)
        CHECK((c.gen("E") * c.gen("E")).nilpotency_index() > 0);
    }
    // f-coefficient at |j j>, j = 1/2: -[1][[1/2]] = -1
    const Representation q12 = osp12_rep(rat(1, 2), &ctx, true);
    CHECK(q12.gen("F").at(1, 0) == Scalar::from_int(-1, &ctx));
}

TEST_CASE("sl(2|1) fundamental and q-fundamental") {
    const Representation c = sl21_fund(&ctx, false);
    check_suite("classical_sl21", assignment_from(c));
    const Representation q = sl21_fund(&ctx, true);
    check_suite("uq_sl21", assignment_from(q));
    CHECK(c.gen("E1").nilpotency_index() == 2);
}

TEST_CASE("adjoint representations") {
    // sl(2): 3x3, ad(J0) = diag(2, 0, -2) in the (E1, H1-ish) ordering
    const Representation a2 = classical_rep("sl2", "adjoint", &ctx);
    CHECK(a2.dim == 3);
    check_suite("classical_slN_2", assignment_from(a2));
    // ad(H1) eigenvalues on (H1, E1, F1) basis: 0, 2, -2
    const GradedMatrix adH = a2.gen("H1");
    std::multiset<long> eig;
    for (int i = 0; i < 3; ++i) eig.insert(to_long(adH.at(i, i).rational_value()));
    CHECK(eig == std::multiset<long>{-2, 0, 2});

    const Representation a3 = classical_rep("sl3", "adjoint", &ctx);
    CHECK(a3.dim == 8);
    check_suite("classical_slN_3", assignment_from(a3));

    const Representation a21 = classical_rep("sl21", "adjoint", &ctx);
    CHECK(a21.dim == 8);
    int odd = 0;
    for (int p : a21.parity) odd += p;
    CHECK(odd == 4);  // graded adjoint: 4 even, 4 odd
    check_suite("classical_sl21", assignment_from(a21));

    const Representation ao = classical_rep("osp12", "adjoint", &ctx);
    CHECK(ao.dim == 5);
    check_suite("classical_osp12", assignment_from(ao));
}

TEST_CASE("tensor representations") {
    // classical 1/2 (x) 1/2: J0 -> diag(2, 0, 0, -2)
    const Representation f = sl2_rep(rat(1, 2), &ctx, false);
    const Representation t = tensor_rep(f, f);
    GradedMatrix want(4, {0, 0, 0, 0}, &ctx);
    want.at(0, 0) = Scalar::from_int(2, &ctx);
    want.at(3, 3) = Scalar::from_int(-2, &ctx);
    CHECK(t.gen("J0") == want);
    // U_h(sl2) Delta(X) = X (x) 1 + 1 (x) X on 1/2 (x) 1/2 is nilpotent of index 3
    const GradedMatrix DX = t.gen("Jp");
    CHECK(DX.nilpotency_index() == 3);
    // parity vector of fund (x) fund for sl(2|1)
    const Representation s = sl21_fund(&ctx, false);
    const Representation ts = tensor_rep(s, s);
    CHECK(ts.parity == std::vector<int>{0, 0, 1, 0, 0, 1, 1, 1, 0});
    // from-presentation coproduct: deformed tensor via ohn_sl2
    const auto p = builtin("ohn_sl2");
    const DeformedGeneratorSet d = deform_slN(f, 2);
    Representation dr;
    dr.algebra_id = "uh_sl2";
    dr.rep_label = "spin-1/2";
    dr.dim = 2;
    dr.parity = {0, 0};
    dr.ctx = &ctx;
    dr.generators = d.generators;
    const Representation dt = tensor_rep(dr, dr, CoproductChoice::from_presentation, &p);
    // Delta(T) = T (x) T (group-like)
    CHECK(dt.gen("T") == graded_kron(d.gen("T"), d.gen("T")));
    const GradedMatrix DXh = dt.gen("X");
    CHECK(DXh.nilpotency_index() == 3);
}

TEST_CASE("unknown reps are rejected") {
    CHECK_THROWS_AS(classical_rep("sl2", "spin-9", &ctx), UnknownRep);
    CHECK_THROWS_AS(classical_rep("nope", "fund", &ctx), UnknownRep);
}
