#pragma once

// Nonlinear maps from classical generators to Jordanian/super-Jordanian
// generators, their inverses, the general osp(1|2) map family, and the
// twist operators.

#include "reps.hpp"
#include "series.hpp"

namespace qjord {

struct DeformedGeneratorSet {
    std::string algebra_id;
    std::string variant;  // slN(N) | sl3 | sl2 | osp_super | osp_jordanian_minimal |
                          // osp_jordanian_hdiag | sl21
    std::map<std::string, GradedMatrix> generators;
    Representation source_rep;

    const GradedMatrix& gen(const std::string& s) const {
        auto it = generators.find(s);
        if (it == generators.end())
            throw UnknownRep("deformed set has no generator " + s);
        return it->second;
    }
    int dim() const { return source_rep.dim; }
    const std::vector<int>& parity() const { return source_rep.parity; }
    const ScalarContext* ctx() const { return source_rep.ctx; }
};

namespace detail_deform {

// classical sl(2)-triple access: spin reps name them J0/Jp/Jm, Chevalley
// reps H1/E1/F1
inline GradedMatrix pick(const Representation& r, const char* a, const char* b) {
    if (r.generators.count(a)) return r.gen(a);
    return r.gen(b);
}

struct TPack {
    GradedMatrix T, Tinv, Thalf, Thalfinv, sqrt1pX2, X;  // X = h^-1 ln T
};

// T^{+-1} = +- h R + sqrt(1 + h^2 R^2) for a nilpotent root matrix R,
// together with T^{+-1/2} and X = h^-1 arcsinh(h R)
inline TPack t_pack(const GradedMatrix& R) {
    const ScalarContext* ctx = R.context();
    const Scalar hh = Scalar::h(ctx);
    const GradedMatrix hR = R * hh;
    if (hR.nilpotency_index() < 0) throw NotNilpotent("root generator is not nilpotent");
    const GradedMatrix S = nil_apply(series::sqrt1p(), hR * hR);
    TPack p{S + hR, S - hR, GradedMatrix(), GradedMatrix(), S, GradedMatrix()};
    const GradedMatrix I = GradedMatrix::identity(R.dim(), R.parity(), ctx);
    p.Thalf = nil_apply(series::sqrt1p(), p.T - I);
    p.Thalfinv = nil_apply(series::invsqrt1p(), p.T - I);
    p.X = nil_apply(series::arcsinh(), hR).divide_by(hh);
    return p;
}

}  // namespace detail_deform

// ---- U_h(sl(N)) --------------------------------------------------------------

// Chevalley-basis deformation with the long-root T; for N = 2 the set also
// carries the (H, X, Y) nonlinear basis, for N = 3 the long-root triple
// (E3, F3, H3). EL/HL always name the long-root pair entering the universal
// R-matrix.
inline DeformedGeneratorSet deform_slN(const Representation& rep, int N) {
    using detail_deform::pick;
    const ScalarContext* ctx = rep.ctx;
    const Scalar hh = Scalar::h(ctx);
    const Scalar half = Scalar::from_rational(rat(1, 2), ctx);
    std::vector<GradedMatrix> e(N - 1), f(N - 1), hc(N - 1);
    for (int i = 1; i < N; ++i) {
        const std::string s = std::to_string(i);
        e[i - 1] = N == 2 ? pick(rep, "E1", "Jp") : rep.gen("E" + s);
        f[i - 1] = N == 2 ? pick(rep, "F1", "Jm") : rep.gen("F" + s);
        hc[i - 1] = N == 2 ? pick(rep, "H1", "J0") : rep.gen("H" + s);
    }
    // nested long root e_L = [e1,[e2,...,[e_{N-2}, e_{N-1}]]]
    GradedMatrix eL = e[N - 2];
    for (int i = N - 3; i >= 0; --i) eL = super_bracket(e[i], eL);
    auto tp = detail_deform::t_pack(eL);
    GradedMatrix hsum = hc[0];
    for (int i = 1; i < N - 1; ++i) hsum += hc[i];

    DeformedGeneratorSet out;
    out.algebra_id = "uh_sl" + std::to_string(N);
    out.variant = N == 2 ? "sl2" : (N == 3 ? "sl3" : "slN(" + std::to_string(N) + ")");
    out.source_rep = rep;
    out.generators["T"] = tp.T;
    out.generators["Tinv"] = tp.Tinv;
    out.generators["Thalf"] = tp.Thalf;
    out.generators["Thalfinv"] = tp.Thalfinv;
    auto Tq = [&](int halves) {  // T^{halves/2}
        GradedMatrix out2 = GradedMatrix::identity(rep.dim, rep.parity, ctx);
        const GradedMatrix& b = halves >= 0 ? tp.Thalf : tp.Thalfinv;
        for (int k = 0; k < std::abs(halves); ++k) out2 = out2 * b;
        return out2;
    };
    for (int i = 1; i < N; ++i) {
        const int d = (i == 1 ? 1 : 0) + (i == N - 1 ? 1 : 0);
        const std::string s = std::to_string(i);
        out.generators["E" + s] = Tq(d) * e[i - 1];
        out.generators["F" + s] =
            Tq(-d) * (f[i - 1] + tp.T * super_bracket(f[i - 1], eL) * hsum * (hh * half));
        out.generators["H" + s] =
            hc[i - 1] - eL * tp.Tinv * hsum * (hh * half * Scalar::from_int(d, ctx));
    }
    // long-root pair for the universal R-matrix
    out.generators["EL"] = tp.X;
    out.generators["HL"] = tp.sqrt1pX2 * hsum;
    if (N == 2) {
        const GradedMatrix& J0 = hc[0];
        const GradedMatrix I = GradedMatrix::identity(rep.dim, rep.parity, ctx);
        out.generators["H"] = tp.sqrt1pX2 * J0;
        out.generators["X"] = tp.X;
        out.generators["Y"] =
            f[0] - e[0] * (J0 * J0 - I) * (hh * hh * Scalar::from_rational(rat(1, 4), ctx));
    }
    if (N == 3) {
        GradedMatrix e3 = super_bracket(e[0], e[1]);
        GradedMatrix f3 = super_bracket(f[1], f[0]);
        GradedMatrix h3 = hc[0] + hc[1];
        const GradedMatrix I = GradedMatrix::identity(rep.dim, rep.parity, ctx);
        out.generators["E3"] = tp.X;
        out.generators["H3"] = tp.sqrt1pX2 * h3;
        out.generators["F3"] =
            f3 - e3 * (h3 * h3 - I) * (hh * hh * Scalar::from_rational(rat(1, 4), ctx));
    }
    return out;
}

// ---- super-Jordanian U_h(osp(1|2)) -------------------------------------------

inline DeformedGeneratorSet deform_osp_super(const Representation& rep) {
    const ScalarContext* ctx = rep.ctx;
    const Scalar hh = Scalar::h(ctx);
    const GradedMatrix e = rep.gen("E"), f = rep.gen("F"), hc = rep.gen("H");
    const GradedMatrix e2 = e * e;
    auto tp = detail_deform::t_pack(e2);
    const GradedMatrix I = GradedMatrix::identity(rep.dim, rep.parity, ctx);
    // (T-1)/(T+1) via the Neumann series of (T+1)/2
    const GradedMatrix Tm1 = tp.T - I;
    const GradedMatrix inv_Tp1 =
        nil_apply(series::neumann_inv(), (tp.T + I) * Scalar::from_rational(rat(1, 2), ctx)) *
        Scalar::from_rational(rat(1, 2), ctx);
    const GradedMatrix frac = Tm1 * inv_Tp1;
    DeformedGeneratorSet out;
    out.algebra_id = "uh_osp12";
    out.variant = "osp_super";
    out.source_rep = rep;
    out.generators["E"] = e;
    out.generators["H"] = tp.sqrt1pX2 * hc;
    const GradedMatrix F =
        f + frac * e * (hh * Scalar::from_rational(rat(1, 4), ctx)) -
        frac * e * hc * (hh * Scalar::from_rational(rat(1, 2), ctx));
    out.generators["F"] = F;
    // Y = -F^2 (the relation list demands F^2 = -Y; see discrepancy ledger)
    out.generators["Y"] = -(F * F);
    out.generators["T"] = tp.T;
    out.generators["Tinv"] = tp.Tinv;
    out.generators["Thalf"] = tp.Thalf;
    out.generators["Thalfinv"] = tp.Thalfinv;
    return out;
}

// ---- Jordanian U_h(osp(1|2)): map family and the two explicit maps ------------

// mapping functions (phi_1, phi_2, phi_3; u_1, u_2) as truncated series in b+,
// solved from phi_1 per the closed forms
struct MapFunctionSet {
    FormalSeries phi1, phi2, phi3, u1, u2;
};

inline MapFunctionSet solve_map_functions(const FormalSeries& phi1) {
    const ScalarContext* ctx = nullptr;
    const int ord = phi1.order();
    // recover context from a coefficient
    const Scalar c0 = phi1[0];
    MapFunctionSet m;
    m.phi1 = phi1;
    FormalSeries x = FormalSeries::variable(ord, c0.context() ? c0.context() : ctx);
    const ScalarContext* cc = c0.context();
    const Scalar hh = Scalar::h(cc);
    FormalSeries phi1p = phi1.derivative();
    FormalSeries phi1_4 = phi1 * phi1 * phi1 * phi1;
    // sqrt(1 + h^2 x^2 phi1^4)
    FormalSeries under = x * x * phi1_4 * (hh * hh);
    FormalSeries root = (FormalSeries::constant(Scalar::from_int(1, cc), ord, cc) + under)
                            .pow_rational(rat(1, 2));
    m.phi2 = (root * phi1) / (phi1 + x * phi1p * Scalar::from_int(2, cc));
    m.phi3 = FormalSeries::constant(Scalar::from_int(1, cc), ord, cc) / phi1;
    m.u1 = x * phi1 * phi1 * phi1 *
           (-(hh * hh * Scalar::from_rational(rat(1, 4), cc)));
    FormalSeries one = FormalSeries::constant(Scalar::from_int(1, cc), ord, cc);
    m.u2 = (one - root * m.phi2) / ((x * phi1) * Scalar::from_int(2, cc));
    return m;
}

// direct map with given phi_1: E = phi1(b+) e, H = phi2(b+) h,
// F = phi3(b+) f + u1(b+) e + u2(b+) e h, T from (phi1, b+)
inline DeformedGeneratorSet deform_osp_jordanian_family(const Representation& rep,
                                                        const MapFunctionSet& m,
                                                        const std::string& variant) {
    const ScalarContext* ctx = rep.ctx;
    const Scalar hh = Scalar::h(ctx);
    const GradedMatrix e = rep.gen("E"), f = rep.gen("F"), hc = rep.gen("H");
    const GradedMatrix bp = e * e;
    const GradedMatrix phi1 = m.phi1.eval(bp);
    DeformedGeneratorSet out;
    out.algebra_id = "uh_osp12";
    out.variant = variant;
    out.source_rep = rep;
    out.generators["E"] = phi1 * e;
    out.generators["H"] = m.phi2.eval(bp) * hc;
    out.generators["F"] =
        m.phi3.eval(bp) * f + m.u1.eval(bp) * e + m.u2.eval(bp) * e * hc;
    // T^{+-1} = +- h b+ phi1^2 + sqrt(1 + h^2 b+^2 phi1^4)
    const GradedMatrix hbphi2 = bp * phi1 * phi1 * hh;
    const GradedMatrix S = nil_apply(series::sqrt1p(), hbphi2 * hbphi2);
    const GradedMatrix T = S + hbphi2, Tinv = S - hbphi2;
    const GradedMatrix I = GradedMatrix::identity(rep.dim, rep.parity, ctx);
    out.generators["T"] = T;
    out.generators["Tinv"] = Tinv;
    out.generators["Thalf"] = nil_apply(series::sqrt1p(), T - I);
    out.generators["Thalfinv"] = nil_apply(series::invsqrt1p(), T - I);
    out.generators["X"] = nil_apply(series::log1p(), T - I).divide_by(hh);
    // Y from the F^2 relation of the Jordanian algebra
    const GradedMatrix& F = out.generators["F"];
    const GradedMatrix TmTi = T - Tinv, TpTi = T + Tinv;
    const GradedMatrix& H = out.generators["H"];
    const GradedMatrix& E = out.generators["E"];
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    out.generators["Y"] =
        -(F * F) + TmTi * H * H * (hh * c(rat(1, 8))) + TmTi * E * F * (hh * c(rat(1, 4))) +
        (T * T - Tinv * Tinv) * H * (hh * c(rat(3, 16))) + TmTi * (hh * c(rat(1, 4))) +
        TmTi * TmTi * TmTi * (hh * c(rat(9, 128)));
    return out;
}

enum class JordanianVariant { minimal, hdiag };

inline DeformedGeneratorSet deform_osp_jordanian(const Representation& rep,
                                                 JordanianVariant v) {
    const ScalarContext* ctx = rep.ctx;
    const int ord = rep.dim + 2;
    const Scalar hh = Scalar::h(ctx);
    FormalSeries x = FormalSeries::variable(ord, ctx);
    FormalSeries one = FormalSeries::constant(Scalar::from_int(1, ctx), ord, ctx);
    if (v == JordanianVariant::minimal) {
        // phi1 = (1 - 2 h b+)^{-1/4}
        FormalSeries base = one - x * (hh * Scalar::from_int(2, ctx));
        MapFunctionSet m = solve_map_functions(base.pow_rational(rat(-1, 4)));
        return deform_osp_jordanian_family(rep, m, "osp_jordanian_minimal");
    }
    // phi1 = (1 - h^2 b+^2 / 4)^{-1/2}
    FormalSeries base = one - x * x * (hh * hh * Scalar::from_rational(rat(1, 4), ctx));
    MapFunctionSet m = solve_map_functions(base.pow_rational(rat(-1, 2)));
    return deform_osp_jordanian_family(rep, m, "osp_jordanian_hdiag");
}

// inverse maps: recover the classical (e, h, f) matrices from the deformed set
inline Representation inverse_osp_jordanian(const DeformedGeneratorSet& set,
                                            JordanianVariant v) {
    const ScalarContext* ctx = set.ctx();
    const Scalar hh = Scalar::h(ctx);
    const GradedMatrix &T = set.gen("T"), &Ti = set.gen("Tinv"), &E = set.gen("E"),
                       &H = set.gen("H"), &F = set.gen("F");
    const GradedMatrix &Th = set.gen("Thalf"), &Thi = set.gen("Thalfinv");
    const GradedMatrix I = GradedMatrix::identity(set.dim(), set.parity(), ctx);
    Representation out;
    out.algebra_id = "osp12";
    out.rep_label = set.source_rep.rep_label;
    out.dim = set.dim();
    out.parity = set.parity();
    out.ctx = ctx;
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    GradedMatrix e(0, {}, ctx), hcl(0, {}, ctx), f(0, {}, ctx);
    if (v == JordanianVariant::minimal) {
        e = Thi * E;
        hcl = T * H;
        f = Th * F + Th * (T - Ti) * E * (hh * c(rat(1, 8))) - Th * E * H * (hh * c(rat(1, 2)));
    } else {
        // cosh(hX/2) = (Thalf + Thalfinv)/2, sinh(hX) = (T - Tinv)/2
        const GradedMatrix ch = (Th + Thi) * c(rat(1, 2));
        const GradedMatrix sh2 = (Th - Thi) * c(rat(1, 2));
        const GradedMatrix shX = (T - Ti) * c(rat(1, 2));
        const GradedMatrix sech = nil_apply(series::neumann_inv(), ch);
        e = sech * E;
        hcl = H;
        f = ch * F + shX * ch * E * (hh * c(rat(1, 4))) + sh2 * E * H * (hh * c(rat(1, 2)));
    }
    out.generators["E"] = e;
    out.generators["H"] = hcl;
    out.generators["F"] = f;
    out.generators["Bp"] = e * e;
    out.generators["Bm"] = -(f * f);
    return out;
}

// ---- sl(2|1) -------------------------------------------------------------------

inline DeformedGeneratorSet deform_sl21(const Representation& rep) {
    const ScalarContext* ctx = rep.ctx;
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    const GradedMatrix e1 = rep.gen("E1"), f1 = rep.gen("F1"), h1 = rep.gen("H1");
    const GradedMatrix e2 = rep.gen("E2"), f2 = rep.gen("F2"), h2 = rep.gen("H2");
    const GradedMatrix e3 = rep.gen("E3"), f3 = rep.gen("F3"), h3 = rep.gen("H3");
    auto tp = detail_deform::t_pack(e1);
    const GradedMatrix I = GradedMatrix::identity(rep.dim, rep.parity, ctx);
    DeformedGeneratorSet out;
    out.algebra_id = "uh_sl21";
    out.variant = "sl21";
    out.source_rep = rep;
    out.generators["T"] = tp.T;
    out.generators["Tinv"] = tp.Tinv;
    out.generators["Thalf"] = tp.Thalf;
    out.generators["Thalfinv"] = tp.Thalfinv;
    out.generators["X1"] = tp.X;
    out.generators["H1"] = tp.sqrt1pX2 * h1;
    out.generators["F1"] = f1 - e1 * (h1 * h1 - I) * (hh * hh * c(rat(1, 4)));
    out.generators["H2"] = h2 - e1 * e1 * h1 * (hh * hh * c(rat(1, 2)));
    out.generators["E2"] =
        e2 - e1 * e3 * (h1 * Scalar::from_int(2, ctx) + I) * (hh * hh * c(rat(1, 4)));
    out.generators["F2"] = f2;
    out.generators["H3"] = h3 + e1 * e1 * h1 * (hh * hh * c(rat(1, 2)));
    out.generators["E3"] = e3;
    out.generators["F3"] =
        f3 + e1 * f2 * (h1 * Scalar::from_int(2, ctx) + I) * (hh * hh * c(rat(1, 4)));
    return out;
}

// ---- twist operators -------------------------------------------------------------

struct TwistOperator {
    GradedMatrix G;   // twist on the tensor representation
    GradedMatrix g;   // antipode transform on the single representation
    int order = -1;   // -1 = exact, k = series truncated mod h^{k+1}
    std::string variant;
};

struct OrderUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline TwistOperator twist_operator(JordanianVariant v, const DeformedGeneratorSet& a,
                                    const DeformedGeneratorSet& b, int order = -1) {
    const ScalarContext* ctx = a.ctx();
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    if (v == JordanianVariant::minimal) {
        // G = exp(h TH (x) X) exact; g = exp(-1/2 TH (1 - T^-2)) exact
        const GradedMatrix THa = a.gen("T") * a.gen("H");
        const GradedMatrix M = graded_kron(THa, b.gen("X")) * hh;
        TwistOperator t{nil_apply(series::exp(), M), GradedMatrix(), -1,
                        "osp_jordanian_minimal"};
        const GradedMatrix I = GradedMatrix::identity(a.dim(), a.parity(), ctx);
        const GradedMatrix arg =
            THa * (I - a.gen("Tinv") * a.gen("Tinv")) * (-c(rat(1, 2)));
        t.g = nil_apply(series::exp(), arg);
        return t;
    }
    if (order > 2 || order < 0)
        throw OrderUnavailable("hdiag twist is only available to order 2");
    // G = 1(x)1 + (h/2) r + (h^2/8)(r^2 + H(x)X^2 + X^2(x)H),
    // r = H (x) X - X (x) H
    const GradedMatrix r = graded_kron(a.gen("H"), b.gen("X")) -
                           graded_kron(a.gen("X"), b.gen("H"));
    const GradedMatrix I2 = GradedMatrix::identity(
        a.dim() * b.dim(), parity_kron(a.parity(), b.parity()), ctx);
    GradedMatrix G = I2;
    if (order >= 1) G += r * (hh * c(rat(1, 2)));
    if (order >= 2)
        G += (r * r + graded_kron(a.gen("H"), b.gen("X") * b.gen("X")) +
              graded_kron(a.gen("X") * a.gen("X"), b.gen("H"))) *
             (hh * hh * c(rat(1, 8)));
    // g = 1 - h X + (h^2/2) X^2 + O(h^3)
    const GradedMatrix I1 = GradedMatrix::identity(a.dim(), a.parity(), ctx);
    GradedMatrix g = I1;
    if (order >= 1) g = g - a.gen("X") * hh;
    if (order >= 2) g += a.gen("X") * a.gen("X") * (hh * hh * c(rat(1, 2)));
    return TwistOperator{G, g, order, "osp_jordanian_hdiag"};
}

}  // namespace qjord
