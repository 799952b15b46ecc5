#pragma once

// R-matrices three ways: the q-deformed block displays, their q -> 1
// contraction by singular gauges, closed-form R_h evaluation through the
// deformed generator sets, and the universal exponential formulas.

#include "deform.hpp"

namespace qjord {

struct UnknownFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RRoute { contracted, closed_form, universal };

struct RMatrixResult {
    GradedMatrix matrix;
    std::string family;                 // sl2 | sl3 | slN | osp | sl21
    std::string rep1, rep2;             // labels
    std::vector<int> parity1, parity2;  // leg gradings
    int dim1 = 0, dim2 = 0;
    RRoute route = RRoute::contracted;
};

struct GaugeSpec {
    std::string family;   // sl2 | sl3 | slN | osp | sl21
    int qexp_base = 1;    // 1 for E_q, 2 for E_{q^2}
    int eta_den_pow = 1;  // eta = h/(q^k - 1): k = 1 (sl) or 2 (osp)
};

inline GaugeSpec gauge_spec_for(const std::string& family) {
    if (family == "osp") return {family, 2, 2};
    return {family, 1, 1};
}

namespace detail_contract {

// plain materialization of an operator-valued block display
inline GradedMatrix materialize(const std::vector<std::vector<GradedMatrix>>& blocks,
                                const std::vector<int>& p1, const std::vector<int>& p2,
                                const ScalarContext* ctx) {
    const int n1 = static_cast<int>(blocks.size());
    const int n2 = blocks[0][0].dim();
    GradedMatrix out(n1 * n2, parity_kron(p1, p2), ctx);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b)
            for (int k = 0; k < n2; ++k)
                for (int l = 0; l < n2; ++l)
                    out.at(a * n2 + k, b * n2 + l) = blocks[a][b].at(k, l);
    return out;
}

// nilpotent q-deformed root generator of the gauge for a q-rep
inline GradedMatrix gauge_root(const Representation& rq, const std::string& family) {
    if (family == "sl2") return detail_deform::pick(rq, "E1", "Jp");
    if (family == "osp") {
        const GradedMatrix e = rq.gen("E");
        return e * e;
    }
    if (family == "sl21") return rq.gen("E1");
    // sl3 / slN: nested q-commutator e_{1k+1} = e_{1k} e_{k} - q^-1 e_k e_{1k}
    int N = 3;
    if (family == "slN" || family == "sl3") {
        N = 2;
        while (rq.generators.count("E" + std::to_string(N))) ++N;
    }
    GradedMatrix root = rq.gen("E1");
    const Scalar qinv = Scalar::q_power(-1, rq.ctx);
    for (int k = 2; k < N; ++k) {
        const GradedMatrix& ek = rq.gen("E" + std::to_string(k));
        root = root * ek - ek * root * qinv;
    }
    return root;
}

}  // namespace detail_contract

// gauge operator G = E_{q^b}(eta * root) evaluated in a q-representation
inline GradedMatrix gauge(const Representation& rq, const GaugeSpec& spec) {
    const ScalarContext* ctx = rq.ctx;
    const Scalar eta = Scalar::h(ctx) /
                       (Scalar::q_power(spec.eta_den_pow, ctx) - Scalar::from_int(1, ctx));
    const GradedMatrix root = detail_contract::gauge_root(rq, spec.family);
    if (root.nilpotency_index() < 0) throw NotNilpotent("gauge root not nilpotent");
    return nil_apply(series::qexp(spec.qexp_base), root * eta);
}

// ---- R_q displays -----------------------------------------------------------

// sl(2), 1/2 (x) j (display with q^{J0/2} diagonals)
inline RMatrixResult rq_sl2(const Representation& rj) {
    const ScalarContext* ctx = rj.ctx;
    const GradedMatrix qh = sl2_q_cartan(rj, 1);     // q^{J0/2}
    const GradedMatrix qhi = sl2_q_cartan(rj, -1);   // q^{-J0/2}
    const Scalar c = Scalar::q_power(rat(1, 2), ctx) *
                     (Scalar::from_int(1, ctx) - Scalar::q_power(-2, ctx));
    const GradedMatrix Z(rj.dim, rj.parity, ctx);
    std::vector<std::vector<GradedMatrix>> blocks{
        {qh, detail_deform::pick(rj, "Jm", "F1") * c},
        {Z, qhi}};
    RMatrixResult out{detail_contract::materialize(blocks, {0, 0}, rj.parity, ctx),
                      "sl2", "spin-1/2", rj.rep_label, {0, 0}, rj.parity, 2, rj.dim,
                      RRoute::contracted};
    return out;
}

// sl(3), fund (x) arb display; the Cartan factor of Lambda13 sits left of f3
// (the as-printed right placement fails the Yang-Baxter equation; ledgered)
inline RMatrixResult rq_sl3(const Representation& rj) {
    const ScalarContext* ctx = rj.ctx;
    auto qdiag = [&](const Rational& c1, const Rational& c2) {
        // q^{(c1 h1 + c2 h2)} as exact diagonal
        GradedMatrix out(rj.dim, rj.parity, ctx);
        const GradedMatrix &h1 = rj.gen("H1"), &h2 = rj.gen("H2");
        for (int i = 0; i < rj.dim; ++i)
            out.at(i, i) = Scalar::q_power(
                c1 * h1.at(i, i).rational_value() + c2 * h2.at(i, i).rational_value(), ctx);
        return out;
    };
    const Scalar w = Scalar::q_power(1, ctx) - Scalar::q_power(-1, ctx);
    const Scalar pre = Scalar::q_power(rat(-1, 2), ctx) * w;
    const GradedMatrix f1 = rj.gen("F1"), f2 = rj.gen("F2");
    const Scalar qinv = Scalar::q_power(-1, ctx);
    const GradedMatrix f3 = f2 * f1 - f1 * f2 * Scalar::q_power(1, ctx);
    const GradedMatrix L12 = qdiag(rat(-1, 2), 0) * f1 * pre;
    const GradedMatrix L13 = qdiag(rat(-1, 2), rat(-1, 2)) * f3 * pre;
    const GradedMatrix L23 = qdiag(0, rat(-1, 2)) * f2 * pre;
    const GradedMatrix d1 = qdiag(rat(2, 3), rat(1, 3));
    const GradedMatrix d2 = qdiag(rat(-1, 3), rat(1, 3));
    const GradedMatrix d3 = qdiag(rat(-1, 3), rat(-2, 3));
    const GradedMatrix Z(rj.dim, rj.parity, ctx);
    std::vector<std::vector<GradedMatrix>> blocks{
        {d1, d1 * L12, d1 * L13},
        {Z, d2, d2 * L23},
        {Z, Z, d3}};
    return RMatrixResult{detail_contract::materialize(blocks, {0, 0, 0}, rj.parity, ctx),
                         "sl3", "fund", rj.rep_label, {0, 0, 0}, rj.parity, 3, rj.dim,
                         RRoute::contracted};
}

// sl(3) universal R_q on fund (x) arb: Cartan factor times three q-exponentials
inline RMatrixResult rq_sl3_universal(const Representation& rf, const Representation& rj) {
    const ScalarContext* ctx = rf.ctx;
    auto diag_val = [&](const Representation& r, int i, const char* nm) {
        return r.gen(nm).at(i, i).rational_value();
    };
    const int n1 = rf.dim, n2 = rj.dim;
    GradedMatrix cart(n1 * n2, parity_kron(rf.parity, rj.parity), ctx);
    const Rational ainv[2][2] = {{rat(2, 3), rat(1, 3)}, {rat(1, 3), rat(2, 3)}};
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            Rational expo(0);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    expo += ainv[i][j] *
                            diag_val(rf, a, i == 0 ? "H1" : "H2") *
                            diag_val(rj, b, j == 0 ? "H1" : "H2");
            cart.at(a * n2 + b, a * n2 + b) = Scalar::q_power(expo, ctx);
        }
    const Scalar lam = Scalar::q_power(1, ctx) - Scalar::q_power(-1, ctx);
    auto qc = [&](const Representation& r, const Rational& c1, const Rational& c2) {
        GradedMatrix out(r.dim, r.parity, ctx);
        for (int i = 0; i < r.dim; ++i)
            out.at(i, i) = Scalar::q_power(c1 * diag_val(r, i, "H1") +
                                           c2 * diag_val(r, i, "H2"), ctx);
        return out;
    };
    auto root3 = [&](const Representation& r, bool raising) {
        const Scalar qinv = Scalar::q_power(-1, ctx);
        if (raising) {
            const GradedMatrix &e1 = r.gen("E1"), &e2 = r.gen("E2");
            return e1 * e2 - e2 * e1 * qinv;
        }
        const GradedMatrix &f1 = r.gen("F1"), &f2 = r.gen("F2");
        return f2 * f1 - f1 * f2 * Scalar::q_power(1, ctx);
    };
    auto factor = [&](const GradedMatrix& eA, const GradedMatrix& fB) {
        return nil_apply(series::qexp_brace(-2), plain_kron(eA, fB) * lam);
    };
    // exp_{q^-2}(lam e2 q^{h2/2} (x) q^{-h2/2} f2) etc., order (2)(3)(1)
    const GradedMatrix X2 =
        factor(rf.gen("E2") * qc(rf, 0, rat(1, 2)), qc(rj, 0, rat(-1, 2)) * rj.gen("F2"));
    const GradedMatrix X3 = factor(root3(rf, true) * qc(rf, rat(1, 2), rat(1, 2)),
                                   qc(rj, rat(-1, 2), rat(-1, 2)) * root3(rj, false));
    const GradedMatrix X1 =
        factor(rf.gen("E1") * qc(rf, rat(1, 2), 0), qc(rj, rat(-1, 2), 0) * rj.gen("F1"));
    return RMatrixResult{cart * X2 * X3 * X1, "sl3", rf.rep_label, rj.rep_label,
                         rf.parity, rj.parity, n1, n2, RRoute::universal};
}

// osp(1|2), 1/2 (x) j display
inline RMatrixResult rq_osp(const Representation& rj) {
    const ScalarContext* ctx = rj.ctx;
    const GradedMatrix t = osp_q_cartan(rj, 1);
    const GradedMatrix ti = osp_q_cartan(rj, -1);
    const GradedMatrix th = osp_q_cartan(rj, rat(1, 2));
    const Scalar w = Scalar::q_power(1, ctx) - Scalar::q_power(-1, ctx);
    const GradedMatrix& F = rj.gen("F");
    // q^{-(h+1)/2} = q^{-1/2} q^{-h/2}
    const GradedMatrix qm = osp_q_cartan(rj, rat(-1, 2)) * Scalar::q_power(rat(-1, 2), ctx);
    const GradedMatrix Z(rj.dim, rj.parity, ctx);
    const GradedMatrix I = GradedMatrix::identity(rj.dim, rj.parity, ctx);
    const Scalar mom = -(w * (Scalar::from_int(1, ctx) + Scalar::q_power(-1, ctx)));
    std::vector<std::vector<GradedMatrix>> blocks{
        {t, th * F * (-w), F * F * mom},
        {Z, I, qm * F * w},
        {Z, Z, ti}};
    const std::vector<int> p1{0, 1, 0};
    return RMatrixResult{detail_contract::materialize(blocks, p1, rj.parity, ctx),
                         "osp", "j=1/2", rj.rep_label, p1, rj.parity, 3, rj.dim,
                         RRoute::contracted};
}

// sl(2|1), fund (x) fund: fixed 9x9 numeric display
inline RMatrixResult rq_sl21(const Representation& rf) {
    const ScalarContext* ctx = rf.ctx;
    const std::vector<int> p{0, 0, 1};
    GradedMatrix R(9, parity_kron(p, p), ctx);
    const Scalar w = Scalar::q_power(1, ctx) - Scalar::q_power(-1, ctx);
    for (int i = 0; i < 9; ++i) R.at(i, i) = Scalar::from_int(1, ctx);
    R.at(0, 0) = Scalar::q_power(1, ctx);
    R.at(4, 4) = Scalar::q_power(1, ctx);
    R.at(8, 8) = Scalar::q_power(-2, ctx);
    R.at(1, 3) = w;
    R.at(2, 6) = w;
    R.at(5, 7) = w;
    return RMatrixResult{R, "sl21", "fund", "fund", p, p, 3, 3, RRoute::contracted};
}

// front door: R_q in (fund or 1/2) (x) rep2
inline RMatrixResult rq_matrix(const std::string& family, const Representation& rep2) {
    if (family == "sl2") return rq_sl2(rep2);
    if (family == "sl3") return rq_sl3(rep2);
    if (family == "osp") return rq_osp(rep2);
    if (family == "sl21") return rq_sl21(rep2);
    throw UnknownFamily("rq_matrix: unknown family " + family);
}

// ---- contraction ---------------------------------------------------------------

// (G1^-1 (x) G2^-1) R_q (G1 (x) G2), entrywise q -> 1 limit
inline RMatrixResult contract(const std::string& family, const Representation& rq1,
                              const Representation& rq2) {
    const GaugeSpec spec = gauge_spec_for(family);
    const GradedMatrix G1 = gauge(rq1, spec);
    const GradedMatrix G2 = gauge(rq2, spec);
    const GradedMatrix G1i = nil_apply(series::neumann_inv(), G1);
    const GradedMatrix G2i = nil_apply(series::neumann_inv(), G2);
    RMatrixResult rq = rq_matrix(family, rq2);
    // gauges are even operators: plain and graded Kronecker coincide
    const GradedMatrix GG = plain_kron(G1, G2);
    const GradedMatrix GGi = plain_kron(G1i, G2i);
    RMatrixResult out = rq;
    out.matrix = (GGi * rq.matrix * GG).limit_q1();
    out.route = RRoute::contracted;
    return out;
}

// ---- closed forms ----------------------------------------------------------------

inline RMatrixResult closed_rh_sl2(const DeformedGeneratorSet& s) {
    const ScalarContext* ctx = s.ctx();
    const Scalar hh = Scalar::h(ctx);
    const Scalar half = Scalar::from_rational(rat(1, 2), ctx);
    const GradedMatrix &T = s.gen("T"), &Ti = s.gen("Tinv"), &H = s.gen("H");
    const GradedMatrix Z(s.dim(), s.parity(), ctx);
    std::vector<std::vector<GradedMatrix>> blocks{
        {T, H * (-hh) + (T - Ti) * (hh * half)},
        {Z, Ti}};
    return RMatrixResult{
        detail_contract::materialize(blocks, {0, 0}, s.parity(), ctx),
        "sl2", "spin-1/2", s.source_rep.rep_label, {0, 0}, s.parity(), 2, s.dim(),
        RRoute::closed_form};
}

inline RMatrixResult closed_rh_sl3(const DeformedGeneratorSet& s) {
    const ScalarContext* ctx = s.ctx();
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    const Representation& src = s.source_rep;
    const GradedMatrix &T = s.gen("T"), &Ti = s.gen("Tinv");
    const GradedMatrix &Th = s.gen("Thalf"), &Thi = s.gen("Thalfinv");
    const GradedMatrix e1 = src.gen("E1"), e2 = src.gen("E2");
    const GradedMatrix h3 = src.gen("H1") + src.gen("H2");
    const GradedMatrix I = GradedMatrix::identity(s.dim(), s.parity(), ctx);
    const GradedMatrix Z(s.dim(), s.parity(), ctx);
    std::vector<std::vector<GradedMatrix>> blocks{
        {T, Thi * e2 * (hh * Scalar::from_int(2, ctx)),
         (T + Ti) * h3 * (-hh * c(rat(1, 2))) + (T - Ti) * (hh * c(rat(1, 2)))},
        {Z, I, Th * e1 * (-hh * Scalar::from_int(2, ctx))},
        {Z, Z, Ti}};
    return RMatrixResult{
        detail_contract::materialize(blocks, {0, 0, 0}, s.parity(), ctx),
        "sl3", "fund", src.rep_label, {0, 0, 0}, s.parity(), 3, s.dim(),
        RRoute::closed_form};
}

// osp L operator (equals the closed-form R_h^{1/2;j}); also returns L^-1
inline std::pair<RMatrixResult, RMatrixResult> closed_rh_osp(const DeformedGeneratorSet& s) {
    const ScalarContext* ctx = s.ctx();
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r) { return Scalar::from_rational(r, ctx); };
    const GradedMatrix &T = s.gen("T"), &Ti = s.gen("Tinv"), &E = s.gen("E"),
                       &H = s.gen("H");
    const GradedMatrix &Th = s.gen("Thalf"), &Thi = s.gen("Thalfinv");
    const GradedMatrix I = GradedMatrix::identity(s.dim(), s.parity(), ctx);
    const GradedMatrix Z(s.dim(), s.parity(), ctx);
    const std::vector<int> p1{0, 1, 0};
    std::vector<std::vector<GradedMatrix>> L{
        {T, Th * E * hh, H * (-hh) + (T - Ti) * (hh * c(rat(1, 4)))},
        {Z, I, Thi * E * (-hh)},
        {Z, Z, Ti}};
    std::vector<std::vector<GradedMatrix>> Linv{
        {Ti, Thi * E * (-hh), H * hh + (T - Ti) * (hh * c(rat(1, 4)))},
        {Z, I, Th * E * hh},
        {Z, Z, T}};
    RMatrixResult rl{detail_contract::materialize(L, p1, s.parity(), ctx),
                     "osp", "j=1/2", s.source_rep.rep_label, p1, s.parity(), 3, s.dim(),
                     RRoute::closed_form};
    RMatrixResult rli{detail_contract::materialize(Linv, p1, s.parity(), ctx),
                      "osp", "j=1/2", s.source_rep.rep_label, p1, s.parity(), 3, s.dim(),
                      RRoute::closed_form};
    return {rl, rli};
}

inline RMatrixResult closed_rh_sl21(const DeformedGeneratorSet& s) {
    const ScalarContext* ctx = s.ctx();
    const Scalar hh = Scalar::h(ctx);
    const Scalar half = Scalar::from_rational(rat(1, 2), ctx);
    const GradedMatrix &T = s.gen("T"), &Ti = s.gen("Tinv"), &H1 = s.gen("H1");
    const GradedMatrix I = GradedMatrix::identity(s.dim(), s.parity(), ctx);
    const GradedMatrix Z(s.dim(), s.parity(), ctx);
    const std::vector<int> p1{0, 0, 1};
    std::vector<std::vector<GradedMatrix>> blocks{
        {T, H1 * (-hh) + (T - Ti) * (hh * half), Z},
        {Z, Ti, Z},
        {Z, Z, I}};
    return RMatrixResult{detail_contract::materialize(blocks, p1, s.parity(), ctx),
                         "sl21", "fund", s.source_rep.rep_label, p1, s.parity(), 3, s.dim(),
                         RRoute::closed_form};
}

inline RMatrixResult closed_rh(const std::string& family, const DeformedGeneratorSet& s) {
    if (family == "sl2") return closed_rh_sl2(s);
    if (family == "sl3") return closed_rh_sl3(s);
    if (family == "osp") return closed_rh_osp(s).first;
    if (family == "sl21") return closed_rh_sl21(s);
    throw UnknownFamily("closed_rh: unknown family " + family);
}

// ---- universal R_h -----------------------------------------------------------------

// exp(-h A (x) B') exp(h B (x) A') with (A, B) = (root, T x Cartan)
inline GradedMatrix universal_product(const GradedMatrix& Xa, const GradedMatrix& THa,
                                      const GradedMatrix& Xb, const GradedMatrix& THb,
                                      const ScalarContext* ctx) {
    const Scalar hh = Scalar::h(ctx);
    const GradedMatrix A = nil_apply(series::exp(), graded_kron(Xa, THb) * (-hh));
    const GradedMatrix B = nil_apply(series::exp(), graded_kron(THa, Xb) * hh);
    return A * B;
}

// families: sl2 / sl3 / slN use (EL, T*HL); sl21 uses (X1, T*H1);
// osp_jordanian uses R = G21^-1 G with the minimal twist.
// The second exponential carries coefficient h (see discrepancy ledger).
inline RMatrixResult universal_rh(const std::string& family, const DeformedGeneratorSet& a,
                                  const DeformedGeneratorSet& b) {
    const ScalarContext* ctx = a.ctx();
    RMatrixResult out;
    out.family = family;
    out.rep1 = a.source_rep.rep_label;
    out.rep2 = b.source_rep.rep_label;
    out.parity1 = a.parity();
    out.parity2 = b.parity();
    out.dim1 = a.dim();
    out.dim2 = b.dim();
    out.route = RRoute::universal;
    if (family == "sl2" || family == "sl3" || family == "slN") {
        out.matrix = universal_product(a.gen("EL"), a.gen("T") * a.gen("HL"),
                                       b.gen("EL"), b.gen("T") * b.gen("HL"), ctx);
        return out;
    }
    if (family == "sl21") {
        out.matrix = universal_product(a.gen("X1"), a.gen("T") * a.gen("H1"),
                                       b.gen("X1"), b.gen("T") * b.gen("H1"), ctx);
        return out;
    }
    if (family == "osp_jordanian") {
        TwistOperator t = twist_operator(JordanianVariant::minimal, a, b);
        const GradedMatrix P = graded_flip(a.parity(), b.parity(), ctx);
        const GradedMatrix G21 = P * twist_operator(JordanianVariant::minimal, b, a).G * P;
        out.matrix = nil_apply(series::neumann_inv(), G21) * t.G;
        return out;
    }
    throw UnknownFamily("universal_rh: unknown family " + family);
}

// ---- auxiliary contraction-engine operators -----------------------------------

// T_(alpha) = E^-1(eta root) E(q^alpha eta root) in a q-rep (sl2 family:
// base E_q, eta = h/(q-1); osp family: base E_{q^2}, eta = h/(q^2-1),
// alpha doubles in the inner power)
inline GradedMatrix t_alpha_q(const Representation& rq, const std::string& family,
                              int alpha) {
    const GaugeSpec spec = gauge_spec_for(family);
    const ScalarContext* ctx = rq.ctx;
    const Scalar eta = Scalar::h(ctx) /
                       (Scalar::q_power(spec.eta_den_pow, ctx) - Scalar::from_int(1, ctx));
    const GradedMatrix root = detail_contract::gauge_root(rq, spec.family);
    const GradedMatrix E1 = nil_apply(series::qexp(spec.qexp_base), root * eta);
    const Scalar qa = Scalar::q_power(alpha * spec.eta_den_pow, ctx);
    const GradedMatrix E2 = nil_apply(series::qexp(spec.qexp_base), root * (eta * qa));
    return nil_apply(series::neumann_inv(), E1) * E2;
}

}  // namespace qjord
