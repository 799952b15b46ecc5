#include <catch2/catch_amalgamated.hpp>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;
Scalar S(long n) { return Scalar::from_int(n, &ctx); }
Scalar H() { return Scalar::h(&ctx); }
}  // namespace

TEST_CASE("deform_slN basics for N = 2") {
    // spin-1/2: J+^2 = 0 so T = I + h J+
    const Representation f = classical_rep("sl2", "spin-1/2", &ctx);
    const DeformedGeneratorSet d = deform_slN(f, 2);
    GradedMatrix want = GradedMatrix::identity(2, f.parity, &ctx);
    want.at(0, 1) = H();
    CHECK(d.gen("T") == want);
    // spin-1: H = sqrt(1 + h^2 J+^2) J0 has entries (1,1)=2, (3,3)=-2, (1,3)=-h^2
    const Representation s1 = classical_rep("sl2", "spin-1", &ctx);
    const DeformedGeneratorSet d1 = deform_slN(s1, 2);
    CHECK(d1.gen("H").at(0, 0) == S(2));
    CHECK(d1.gen("H").at(2, 2) == S(-2));
    CHECK(d1.gen("H").at(0, 2) == -(H() * H()));
    // exp(h X) = T
    CHECK(nil_apply(series::exp(), d1.gen("X") * H()) == d1.gen("T"));
}

TEST_CASE("deformation invariants across the families") {
    struct Case {
        std::string tag;
        DeformedGeneratorSet set;
        GradedMatrix root;  // T - T^-1 = 2h root
    };
    std::vector<Case> cases;
    {
        const Representation r = classical_rep("sl2", "spin-1", &ctx);
        cases.push_back({"sl2", deform_slN(r, 2), r.gen("Jp")});
    }
    {
        const Representation r = classical_rep("sl3", "fund", &ctx);
        cases.push_back({"sl3", deform_slN(r, 3),
                         super_bracket(r.gen("E1"), r.gen("E2"))});
    }
    {
        const Representation r = classical_rep("sl4", "fund", &ctx);
        cases.push_back({"sl4", deform_slN(r, 4),
                         super_bracket(r.gen("E1"),
                                       super_bracket(r.gen("E2"), r.gen("E3")))});
    }
    {
        const Representation r = classical_rep("osp12", "j=1", &ctx);
        cases.push_back({"osp_super", deform_osp_super(r), r.gen("E") * r.gen("E")});
    }
    {
        const Representation r = classical_rep("sl21", "fund", &ctx);
        cases.push_back({"sl21", deform_sl21(r), r.gen("E1")});
    }
    for (const auto& c : cases) {
        INFO(c.tag);
        const GradedMatrix I =
            GradedMatrix::identity(c.set.dim(), c.set.parity(), &ctx);
        CHECK(c.set.gen("T") * c.set.gen("Tinv") == I);
        CHECK(c.set.gen("Tinv") * c.set.gen("T") == I);
        CHECK(c.set.gen("Thalf") * c.set.gen("Thalf") == c.set.gen("T"));
        // T - T^-1 = 2h root
        CHECK(c.set.gen("T") - c.set.gen("Tinv") == c.root * (H() * S(2)));
        // h -> 0 degeneration: every deformed generator reduces to a classical one
        for (const auto& [nm, m] : c.set.generators) {
            const GradedMatrix m0 = m.truncate_h(0);
            auto it = c.set.source_rep.generators.find(nm);
            if (it != c.set.source_rep.generators.end()) CHECK(m0 == it->second);
        }
    }
}

TEST_CASE("Y completes the Ohn algebra: [X, Y] = H in spins 1/2, 1, 3/2") {
    for (const char* lbl : {"spin-1/2", "spin-1", "spin-3/2"}) {
        const Representation r = classical_rep("sl2", lbl, &ctx);
        const DeformedGeneratorSet d = deform_slN(r, 2);
        INFO(lbl);
        CHECK(super_bracket(d.gen("X"), d.gen("Y")) == d.gen("H"));
    }
}

TEST_CASE("sl(3) deformation: two printed code paths, one answer") {
    const Representation r = classical_rep("sl3", "fund", &ctx);
    const DeformedGeneratorSet d = deform_slN(r, 3);
    const GradedMatrix e3 = super_bracket(r.gen("E1"), r.gen("E2"));
    const GradedMatrix h1 = r.gen("H1"), h2 = r.gen("H2");
    const GradedMatrix S12 = nil_apply(series::sqrt1p(), e3 * e3 * (H() * H()));
    const Scalar half = Scalar::from_rational(rat(1, 2), &ctx);
    // long forms of H1, H2 equal the short forms
    const GradedMatrix H1_long =
        d.gen("Tinv") * (S12 * h1 + e3 * (h1 - h2) * (H() * half));
    const GradedMatrix H2_long =
        d.gen("Tinv") * (S12 * h2 - e3 * (h1 - h2) * (H() * half));
    CHECK(H1_long == d.gen("H1"));
    CHECK(H2_long == d.gen("H2"));
    // E1 = T^(1/2) e1
    CHECK(d.gen("E1") == d.gen("Thalf") * r.gen("E1"));
}

TEST_CASE("osp super map") {
    // j=1/2 (3-dim): e^4 = 0 so T = 1 + h e^2
    const Representation r12 = classical_rep("osp12", "j=1/2", &ctx);
    const DeformedGeneratorSet s12 = deform_osp_super(r12);
    const GradedMatrix e2 = r12.gen("E") * r12.gen("E");
    CHECK(s12.gen("T") ==
          GradedMatrix::identity(3, r12.parity, &ctx) + e2 * H());
    // j=1: T = 1 + h e^2 + (h^2/2) e^4
    const Representation r1 = classical_rep("osp12", "j=1", &ctx);
    const DeformedGeneratorSet s1 = deform_osp_super(r1);
    const GradedMatrix e2_1 = r1.gen("E") * r1.gen("E");
    CHECK(s1.gen("T") == GradedMatrix::identity(5, r1.parity, &ctx) + e2_1 * H() +
                             e2_1 * e2_1 *
                                 (H() * H() * Scalar::from_rational(rat(1, 2), &ctx)));
    // E^2 = (T - T^-1)/(2h) in every catalog rep
    for (const char* lbl : {"j=1/2", "j=1", "j=3/2"}) {
        const Representation r = classical_rep("osp12", lbl, &ctx);
        const DeformedGeneratorSet s = deform_osp_super(r);
        INFO(lbl);
        CHECK(s.gen("E") * s.gen("E") ==
              (s.gen("T") - s.gen("Tinv")).divide_by(H() * S(2)));
        // [T, Y] = (h/2)(TH + HT) discriminates the Y = -F^2 choice
        CHECK(super_bracket(s.gen("T"), s.gen("Y")) ==
              (s.gen("T") * s.gen("H") + s.gen("H") * s.gen("T")) *
                  (H() * Scalar::from_rational(rat(1, 2), &ctx)));
    }
}

TEST_CASE("Jordanian osp maps: explicit displays and round-trips") {
    for (const char* lbl : {"j=1/2", "j=1"}) {
        const Representation r = classical_rep("osp12", lbl, &ctx);
        const GradedMatrix bp = r.gen("E") * r.gen("E");
        const GradedMatrix I = GradedMatrix::identity(r.dim, r.parity, &ctx);
        INFO(lbl);
        // minimal: T^{+-1} = (1 - 2h b+)^{-+1/2}
        const DeformedGeneratorSet m = deform_osp_jordanian(r, JordanianVariant::minimal);
        const GradedMatrix base = I - bp * (H() * S(2));
        CHECK(m.gen("T") == nil_apply(series::invsqrt1p(), base - I));
        CHECK(m.gen("Tinv") == nil_apply(series::sqrt1p(), base - I));
        // hdiag: H = h (classical Cartan unchanged)
        const DeformedGeneratorSet hd = deform_osp_jordanian(r, JordanianVariant::hdiag);
        CHECK(hd.gen("H") == r.gen("H"));
        // round-trips: inverse . direct = identity on (e, h, f)
        for (auto v : {JordanianVariant::minimal, JordanianVariant::hdiag}) {
            const DeformedGeneratorSet s =
                v == JordanianVariant::minimal ? m : hd;
            const Representation back = inverse_osp_jordanian(s, v);
            CHECK(back.gen("E") == r.gen("E"));
            CHECK(back.gen("H") == r.gen("H"));
            CHECK(back.gen("F") == r.gen("F"));
        }
    }
}

TEST_CASE("general map family: solved functions have the classical limit") {
    const Representation r = classical_rep("osp12", "j=1", &ctx);
    const int ord = r.dim + 2;
    // a non-catalog phi1 = 1 + 3 h b+ (terminating series rule)
    FormalSeries phi1 = FormalSeries::constant(S(1), ord, &ctx) +
                        FormalSeries::variable(ord, &ctx) * (H() * S(3));
    const MapFunctionSet m = solve_map_functions(phi1);
    // h -> 0 limits: (phi2, phi3; u1, u2) -> (1, 1; 0, 0)
    CHECK(m.phi2[0].truncate_h(0) == S(1));
    CHECK(m.phi3[0].truncate_h(0) == S(1));
    for (int k = 0; k < ord; ++k) {
        CHECK(m.u1[k].truncate_h(0).is_zero());
        CHECK(m.u2[k].truncate_h(0).is_zero());
        if (k > 0) {
            CHECK(m.phi2[k].truncate_h(0).is_zero());
            CHECK(m.phi3[k].truncate_h(0).is_zero());
        }
    }
    // the family with phi1 of the minimal map reproduces the explicit display
    FormalSeries one = FormalSeries::constant(S(1), ord, &ctx);
    FormalSeries x = FormalSeries::variable(ord, &ctx);
    const MapFunctionSet mm = solve_map_functions(
        (one - x * (H() * S(2))).pow_rational(rat(-1, 4)));
    const DeformedGeneratorSet via_family =
        deform_osp_jordanian_family(r, mm, "osp_jordanian_minimal");
    const DeformedGeneratorSet direct = deform_osp_jordanian(r, JordanianVariant::minimal);
    for (const char* g : {"E", "H", "F", "T", "Tinv"})
        CHECK(via_family.gen(g) == direct.gen(g));
}

TEST_CASE("sl(2|1) deformation examples") {
    const Representation r = classical_rep("sl21", "fund", &ctx);
    const DeformedGeneratorSet d = deform_sl21(r);
    // e1^2 = 0: T = 1 + h e1
    CHECK(d.gen("T") == GradedMatrix::identity(3, r.parity, &ctx) + r.gen("E1") * H());
    // F2 = f2 and E3 = e3 stay undeformed
    CHECK(d.gen("F2") == r.gen("F2"));
    CHECK(d.gen("E3") == r.gen("E3"));
}
