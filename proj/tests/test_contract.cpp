#include <catch2/catch_amalgamated.hpp>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;
Scalar S(long n) { return Scalar::from_int(n, &ctx); }
Scalar H() { return Scalar::h(&ctx); }
Scalar Qp(const Rational& e) { return Scalar::q_power(e, &ctx); }
}  // namespace

TEST_CASE("gauge operators") {
    // sl(2|1) fund: G = I + (h/(q-1)) e1
    const Representation f21 = q_rep("sl21", "fund", &ctx);
    const GradedMatrix G = gauge(f21, gauge_spec_for("sl21"));
    const Scalar eta = H() / (Qp(1) - S(1));
    GradedMatrix want = GradedMatrix::identity(3, f21.parity, &ctx);
    want.at(0, 1) = eta;
    CHECK(G == want);
    // sl(2) spin-1: (1,3) entry of E_q(eta J+) is eta^2/[2]_q!
    const Representation s1 = q_rep("sl2", "spin-1", &ctx);
    const GradedMatrix G1 = gauge(s1, gauge_spec_for("sl2"));
    CHECK(G1.at(0, 2) ==
          eta * eta / qnumber(QNumberKind::bracket_fact, 2, &ctx));
    // osp j=1/2: M = E_{q^2}(eta' e^2) with e^4 = 0 has exactly two terms
    const Representation o12 = q_rep("osp12", "j=1/2", &ctx);
    const GradedMatrix M = gauge(o12, gauge_spec_for("osp"));
    const Scalar eta2 = H() / (Qp(2) - S(1));
    GradedMatrix wantM = GradedMatrix::identity(3, o12.parity, &ctx);
    wantM.at(0, 2) = eta2;
    CHECK(M == wantM);
}

TEST_CASE("R_q displays") {
    // sl(2|1): entry (2,4) = q - q^-1
    const Representation f21 = q_rep("sl21", "fund", &ctx);
    const RMatrixResult rq = rq_matrix("sl21", f21);
    CHECK(rq.matrix.at(1, 3) == Qp(1) - Qp(-1));
    // sl(2) 1/2 (x) 1/2: diagonal carries q^{+-1/2}
    const Representation f2 = q_rep("sl2", "spin-1/2", &ctx);
    const RMatrixResult r2 = rq_matrix("sl2", f2);
    CHECK(r2.matrix.at(0, 0) == Qp(rat(1, 2)));
    CHECK(r2.matrix.at(1, 1) == Qp(rat(-1, 2)));
    CHECK(r2.matrix.at(3, 3) == Qp(rat(1, 2)));
    // sl(3) fund (x) fund: universal route equals the display route entrywise
    const Representation f3 = q_rep("sl3", "fund", &ctx);
    CHECK(rq_matrix("sl3", f3).matrix == rq_sl3_universal(f3, f3).matrix);
}

TEST_CASE("sl(2) contraction golden 4x4 and three-route agreement") {
    const Representation qf = q_rep("sl2", "spin-1/2", &ctx);
    const RMatrixResult R = contract("sl2", qf, qf);
    // [[1, h, -h, h^2], [0,1,0,h], [0,0,1,-h], [0,0,0,1]]
    GradedMatrix want = GradedMatrix::identity(4, R.matrix.parity(), &ctx);
    want.at(0, 1) = H();
    want.at(0, 2) = -H();
    want.at(0, 3) = H() * H();
    want.at(1, 3) = H();
    want.at(2, 3) = -H();
    CHECK(R.matrix == want);
    for (const char* lbl : {"spin-1/2", "spin-1", "spin-3/2"}) {
        INFO(lbl);
        const Representation qj = q_rep("sl2", lbl, &ctx);
        const Representation cj = classical_rep("sl2", lbl, &ctx);
        const Representation cf = classical_rep("sl2", "spin-1/2", &ctx);
        const RMatrixResult Rc = contract("sl2", qf, qj);
        const RMatrixResult Rcl = closed_rh("sl2", deform_slN(cj, 2));
        const RMatrixResult Ru =
            universal_rh("sl2", deform_slN(cf, 2), deform_slN(cj, 2));
        CHECK(Rc.matrix == Rcl.matrix);
        CHECK(Rc.matrix == Ru.matrix);
    }
}

TEST_CASE("sl(2|1) contraction golden 9x9, closed and universal routes") {
    const Representation qf = q_rep("sl21", "fund", &ctx);
    const RMatrixResult R = contract("sl21", qf, qf);
    GradedMatrix want = GradedMatrix::identity(9, R.matrix.parity(), &ctx);
    want.at(0, 1) = H();
    want.at(0, 3) = -H();
    want.at(0, 4) = H() * H();
    want.at(1, 4) = H();
    want.at(3, 4) = -H();
    CHECK(R.matrix == want);
    const Representation cf = classical_rep("sl21", "fund", &ctx);
    const DeformedGeneratorSet d = deform_sl21(cf);
    CHECK(closed_rh("sl21", d).matrix == R.matrix);
    CHECK(universal_rh("sl21", d, d).matrix == R.matrix);
}

TEST_CASE("sl(3) contraction equals the closed form") {
    const Representation qf = q_rep("sl3", "fund", &ctx);
    const RMatrixResult R = contract("sl3", qf, qf);
    const Representation cf = classical_rep("sl3", "fund", &ctx);
    CHECK(R.matrix == closed_rh("sl3", deform_slN(cf, 3)).matrix);
    // spot entries: (1,3) block pattern -h*h3 + h^2 e3 at rows/cols (1,7),(1,9)
    CHECK(R.matrix.at(0, 6) == -H());
    CHECK(R.matrix.at(0, 8) == H() * H());
    CHECK(R.matrix.at(1, 5) == H() * S(2));   // 2h T^-1/2 e2 block
    CHECK(R.matrix.at(3, 7) == -(H() * S(2)));
}

TEST_CASE("osp contraction: closed form agreement at 1/2 (x) {1/2, 1}") {
    const Representation q12 = q_rep("osp12", "j=1/2", &ctx);
    for (const char* lbl : {"j=1/2", "j=1"}) {
        INFO(lbl);
        const Representation qj = q_rep("osp12", lbl, &ctx);
        const RMatrixResult R = contract("osp", q12, qj);
        const Representation cj = classical_rep("osp12", lbl, &ctx);
        const auto [L, Linv] = closed_rh_osp(deform_osp_super(cj));
        CHECK(R.matrix == L.matrix);
        // L L^-1 = 1
        const GradedMatrix I =
            GradedMatrix::identity(L.matrix.dim(), L.matrix.parity(), &ctx);
        CHECK(L.matrix * Linv.matrix == I);
    }
}

TEST_CASE("osp Jordanian universal R = G21^-1 G is triangular") {
    const Representation c12 = classical_rep("osp12", "j=1/2", &ctx);
    const DeformedGeneratorSet a = deform_osp_jordanian(c12, JordanianVariant::minimal);
    const RMatrixResult R = universal_rh("osp_jordanian", a, a);
    const GradedMatrix P = graded_flip(a.parity(), a.parity(), &ctx);
    const GradedMatrix I = GradedMatrix::identity(9, R.matrix.parity(), &ctx);
    CHECK(P * R.matrix * P * R.matrix == I);
}

TEST_CASE("T_(alpha) operators: limits compose as powers") {
    const Representation qj = q_rep("sl2", "spin-1", &ctx);
    const Representation cj = classical_rep("sl2", "spin-1", &ctx);
    const DeformedGeneratorSet d = deform_slN(cj, 2);
    for (int alpha : {-2, -1, 1, 2}) {
        INFO(alpha);
        const GradedMatrix lim = t_alpha_q(qj, "sl2", alpha).limit_q1();
        const GradedMatrix want =
            (alpha > 0 ? d.gen("T") : d.gen("Tinv")).pow(std::abs(alpha));
        CHECK(lim == want);
    }
    // osp family version
    const Representation qo = q_rep("osp12", "j=1", &ctx);
    const DeformedGeneratorSet dos =
        deform_osp_super(classical_rep("osp12", "j=1", &ctx));
    for (int alpha : {-1, 1, 2}) {
        INFO("osp " << alpha);
        const GradedMatrix lim = t_alpha_q(qo, "osp", alpha).limit_q1();
        const GradedMatrix want =
            (alpha > 0 ? dos.gen("T") : dos.gen("Tinv")).pow(std::abs(alpha));
        CHECK(lim == want);
    }
}

TEST_CASE("gauge conjugation identities at the q level") {
    // E^-1(eta J+) q^{a J0/2} E(eta J+) = T_(a) q^{a J0/2}  (verified form)
    const Representation qj = q_rep("sl2", "spin-1", &ctx);
    const GradedMatrix G = gauge(qj, gauge_spec_for("sl2"));
    const GradedMatrix Gi = nil_apply(series::neumann_inv(), G);
    for (int a : {-1, 1, 2}) {
        INFO(a);
        const GradedMatrix qC = sl2_q_cartan(qj, a);
        CHECK(Gi * qC * G == t_alpha_q(qj, "sl2", a) * qC);
    }
    // composition: T_(a+b) q^{(a+b)J0/2} = (T_(a) q^{a J0/2})(T_(b) q^{b J0/2})
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, -1}}) {
        INFO(a << "," << b);
        const GradedMatrix lhs = t_alpha_q(qj, "sl2", a + b) * sl2_q_cartan(qj, a + b);
        const GradedMatrix rhs = (t_alpha_q(qj, "sl2", a) * sl2_q_cartan(qj, a)) *
                                 (t_alpha_q(qj, "sl2", b) * sl2_q_cartan(qj, b));
        CHECK(lhs == rhs);
    }
    // E^-1(eta J+) J- E(eta J+) = J- - eta/(q - q^-1)(T_1 q^{J0} - T_-1 q^{-J0})
    const Scalar eta = H() / (Qp(1) - S(1));
    const GradedMatrix lhs = Gi * qj.gen("Jm") * G;
    const GradedMatrix rhs =
        qj.gen("Jm") - (t_alpha_q(qj, "sl2", 1) * sl2_q_cartan(qj, 2) -
                        t_alpha_q(qj, "sl2", -1) * sl2_q_cartan(qj, -2)) *
                           (eta / (Qp(1) - Qp(-1)));
    CHECK(lhs == rhs);
}

TEST_CASE("osp operator-product identities hold for all n up to nilpotency") {
    for (const char* lbl : {"j=1", "j=3/2"}) {
        INFO(lbl);
        const Representation r = q_rep("osp12", lbl, &ctx);
        const GradedMatrix E = r.gen("E"), F = r.gen("F");
        const GradedMatrix t = r.gen("t"), ti = r.gen("tinv");
        const Scalar q = Qp(1), w = Qp(1) - Qp(-1), one = S(1);
        const int bound = r.dim / 2 + 1;
        for (int n = 1; n <= bound; ++n) {
            const GradedMatrix e2n = E.pow(2 * n);
            const GradedMatrix e2n1 = E.pow(2 * n - 1);
            const GradedMatrix e2n2 = E.pow(2 * n - 2);
            auto brace = [&](long m, int base) {
                return qnumber(QNumberKind::brace, m, &ctx, base);
            };
            // f e^{2n} = e^{2n} f - q/(q+1){n}_{q^2} e^{2n-1} t - 1/(q+1){n}_{q^-2} e^{2n-1} t^-1
            const GradedMatrix lhs1 = F * e2n;
            const GradedMatrix rhs1 =
                e2n * F - e2n1 * t * (q / (q + one) * brace(n, 2)) -
                e2n1 * ti * (one / (q + one) * brace(n, -2));
            CHECK(lhs1 == rhs1);
            // the f^2 e^{2n} identity with the q-binomial tail
            const GradedMatrix lhs2 = F * F * e2n;
            const GradedMatrix rhs2 =
                e2n * F * F +
                e2n1 * t * F * (q * (q - one) / (q + one) * brace(n, 2)) -
                e2n1 * ti * F * ((q - one) / (q * (q + one)) * brace(n, -2)) +
                e2n2 * t * t *
                    (q / (q + one) *
                     (brace(n, 4) / w -
                      q * q * (q - one) / (q + one) * qbrace_binomial(n, 2, &ctx, 2))) -
                e2n2 * ti * ti *
                    (one / (q + one) *
                     (brace(n, -4) / w -
                      (q - one) / (q * q * (q + one)) * qbrace_binomial(n, 2, &ctx, -2))) -
                e2n2 * (q / ((q + one) * (q + one) * (q + one)) *
                        (q * brace(n, 2) + brace(n, -2)));
            CHECK(lhs2 == rhs2);
        }
    }
}
