#include <catch2/catch_amalgamated.hpp>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;
Scalar S(long n) { return Scalar::from_int(n, &ctx); }
Scalar H() { return Scalar::h(&ctx); }

GradedMatrix shift_up(int n) {  // unit superdiagonal
    GradedMatrix m(n, std::vector<int>(n, 0), &ctx);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = S(1);
    return m;
}
}  // namespace

TEST_CASE("nil_apply on the catalog examples") {
    // sqrt1p on h^2 J+^2 in spin-1: I + (h^2/2) J+^2
    const GradedMatrix Jp = shift_up(3);
    const GradedMatrix X2 = Jp * Jp * (H() * H());
    const GradedMatrix got = nil_apply(series::sqrt1p(), X2);
    GradedMatrix want = GradedMatrix::identity(3, Jp.parity(), &ctx);
    want.at(0, 2) = Scalar::from_rational(rat(1, 2), &ctx) * H() * H();
    CHECK(got == want);
    // exp(0) = I
    const GradedMatrix Z(3, Jp.parity(), &ctx);
    CHECK(nil_apply(series::exp(), Z) == GradedMatrix::identity(3, Jp.parity(), &ctx));
    // qexp on (h/(q-1)) E12 with E12^2 = 0 truncates at k = 1
    GradedMatrix E12(3, Jp.parity(), &ctx);
    E12.at(0, 1) = S(1);
    const Scalar eta = H() / (Scalar::q_power(1, &ctx) - S(1));
    const GradedMatrix g = nil_apply(series::qexp(1), E12 * eta);
    GradedMatrix wg = GradedMatrix::identity(3, Jp.parity(), &ctx);
    wg.at(0, 1) = eta;
    CHECK(g == wg);
    // non-nilpotent argument is rejected
    CHECK_THROWS_AS(nil_apply(series::exp(), GradedMatrix::identity(3, Jp.parity(), &ctx)),
                    NotNilpotent);
}

TEST_CASE("series invariants on nilpotent inputs") {
    for (int n : {2, 3, 4, 5}) {
        const GradedMatrix X = shift_up(n) * H();
        const GradedMatrix I = GradedMatrix::identity(n, X.parity(), &ctx);
        const GradedMatrix r = nil_apply(series::sqrt1p(), X);
        CHECK(r * r == I + X);
        CHECK(nil_apply(series::exp(), X) * nil_apply(series::exp(), -X) == I);
        CHECK(nil_apply(series::neumann_inv(), I + X) * (I + X) == I);
        // exp(log1p(X)) = 1 + X
        CHECK(nil_apply(series::exp(), nil_apply(series::log1p(), X)) == I + X);
        // sinh(arcsinh(X)) = X
        CHECK(nil_apply(series::sinh(), nil_apply(series::arcsinh(), X)) == X);
    }
}

TEST_CASE("T-series coefficients c0..c5 are 1, +-1, 1/2, 0, -1/8, 0") {
    // expand +-x + sqrt(1+x^2) on a 7-dim shift (x^7 = 0)
    const GradedMatrix x = shift_up(7);
    const GradedMatrix Tp = nil_apply(series::sqrt1p(), x * x) + x;
    const GradedMatrix Tm = nil_apply(series::sqrt1p(), x * x) - x;
    const Rational want[6] = {1, 1, rat(1, 2), 0, rat(-1, 8), 0};
    for (int k = 0; k < 6; ++k) {
        CHECK(Tp.at(0, k) == Scalar::from_rational(want[k], &ctx));
        const Rational w = k == 1 ? -want[k] : want[k];
        CHECK(Tm.at(0, k) == Scalar::from_rational(w, &ctx));
    }
}

TEST_CASE("graded Kronecker and the composition law on sl(2|1)") {
    const Representation f = sl21_fund(&ctx, false);
    // even (x) even reduces to the plain Kronecker
    const GradedMatrix A = f.gen("H1"), B = f.gen("E1");
    CHECK(graded_kron(A, B) == plain_kron(A, B));
    // (A (x) B)(C (x) D) = (-1)^{|B||C|} AC (x) BD over all generator 4-tuples
    std::vector<std::string> names{"H1", "H2", "E1", "F1", "E2", "F2"};
    auto par_of = [&](const std::string& n) {
        return static_cast<int>(f.gen(n).op_parity());
    };
    for (const auto& a : names)
        for (const auto& b : names)
            for (const auto& c : names)
                for (const auto& d : names) {
                    const GradedMatrix lhs =
                        graded_kron(f.gen(a), f.gen(b)) * graded_kron(f.gen(c), f.gen(d));
                    GradedMatrix rhs =
                        graded_kron(f.gen(a) * f.gen(c), f.gen(b) * f.gen(d));
                    if (par_of(b) == 1 && par_of(c) == 1) rhs = -rhs;
                    CHECK(lhs == rhs);
                }
    // parity vector of fund (x) fund: (e,e,o, e,e,o, o,o,e)
    const std::vector<int> want{0, 0, 1, 0, 0, 1, 1, 1, 0};
    CHECK(parity_kron(f.parity, f.parity) == want);
}

TEST_CASE("super bracket") {
    const Representation f = sl21_fund(&ctx, false);
    // [E12, E21] = diag(1, -1) block (sl(2) structure)
    CHECK(super_bracket(f.gen("E1"), f.gen("F1")) == f.gen("H1"));
    // {E, F} = -H in classical osp(1|2), j = 1/2
    const Representation o = osp12_rep(rat(1, 2), &ctx, false);
    CHECK(super_bracket(o.gen("E"), o.gen("F")) == -o.gen("H"));
    // odd-odd graded bracket is automatically the anticommutator
    CHECK(super_bracket(o.gen("E"), o.gen("F")) ==
          super_bracket(o.gen("E"), o.gen("F"), true));
    // [A, I] = 0
    const GradedMatrix I = GradedMatrix::identity(o.dim, o.parity, &ctx);
    CHECK(super_bracket(o.gen("E"), I).is_zero());
}

TEST_CASE("formal power series machinery") {
    const int ord = 8;
    FormalSeries x = FormalSeries::variable(ord, &ctx);
    FormalSeries one = FormalSeries::constant(S(1), ord, &ctx);
    // (1+x)^(1/2) squared = 1 + x
    FormalSeries r = (one + x).pow_rational(rat(1, 2));
    FormalSeries sq = r * r;
    for (int k = 0; k < ord; ++k)
        CHECK(sq[k] == (k <= 1 ? S(1) : S(0)));
    // derivative of x^2 is 2x
    FormalSeries d = (x * x).derivative();
    CHECK(d[1] == S(2));
    // division and x-divisibility
    FormalSeries q = (x * x + x) / x;  // = 1 + x
    CHECK(q[0] == S(1));
    CHECK(q[1] == S(1));
    CHECK_THROWS_AS(one / x, InexactDivision);
}
