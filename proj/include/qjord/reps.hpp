#pragma once

// Representation catalog: exact classical and q-deformed matrix
// representations of sl(2), sl(N), osp(1|2), sl(2|1); graded adjoint and
// tensor representations.
//
// Asymmetric integer bases throughout: sl(2) spin-j acts by
//   J+|m> = |m+1>, J-|m> = (j+m)(j-m+1)|m-1>, J0|m> = 2m|m>;
// osp(1|2) uses the (4j+1)-dimensional basis with e|jm> = |j m+1/2> and
// integer/rational f-coefficients. Basis ordering: highest weight first.

#include <map>
#include <string>

#include "builtins.hpp"
#include "graded_matrix.hpp"

namespace qjord {

struct UnknownRep : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Representation {
    std::string algebra_id;   // sl2, sl3, ..., slN, osp12, sl21 (or uq_ prefixed)
    std::string rep_label;    // "spin-1/2", "fund", "adjoint", "j=1", ...
    int dim = 0;
    std::vector<int> parity;
    std::map<std::string, GradedMatrix> generators;
    bool q_deformed = false;
    const ScalarContext* ctx = nullptr;

    const GradedMatrix& gen(const std::string& s) const {
        auto it = generators.find(s);
        if (it == generators.end())
            throw UnknownRep("representation has no generator " + s);
        return it->second;
    }
};

namespace detail_reps {

inline Rational parse_spin(const std::string& label) {
    // "spin-1/2", "spin-1", "j=1/2", ...
    std::string s = label;
    auto dash = s.find('-');
    auto eq = s.find('=');
    if (dash != std::string::npos) s = s.substr(dash + 1);
    else if (eq != std::string::npos) s = s.substr(eq + 1);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stol(s));
    return rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

}  // namespace detail_reps

// ---- sl(2) ---------------------------------------------------------------

inline Representation sl2_rep(const Rational& j, const ScalarContext* ctx, bool qdef) {
    const long twoj = to_long(j * 2);
    const int n = static_cast<int>(twoj) + 1;
    std::vector<int> par(n, 0);
    Representation r;
    r.algebra_id = qdef ? "uq_sl2" : "sl2";
    r.rep_label = "spin-" + (twoj % 2 ? std::to_string(twoj) + "/2"
                                      : std::to_string(twoj / 2));
    r.dim = n;
    r.parity = par;
    r.q_deformed = qdef;
    r.ctx = ctx;
    GradedMatrix J0(n, par, ctx), Jp(n, par, ctx), Jm(n, par, ctx);
    // basis index i <-> m = j - i
    for (int i = 0; i < n; ++i) {
        const Rational m = j - i;
        J0.at(i, i) = Scalar::from_rational(2 * m, ctx);
        if (i > 0) Jp.at(i - 1, i) = Scalar::from_int(1, ctx);  // |m> -> |m+1>
        if (i < n - 1) {
            // J-|m> = c |m-1>
            const Rational a = j + m, b = j - m + 1;
            Scalar c = qdef ? qnumber(QNumberKind::bracket, a, ctx) *
                                  qnumber(QNumberKind::bracket, b, ctx)
                            : Scalar::from_rational(a * b, ctx);
            Jm.at(i + 1, i) = c;
        }
    }
    r.generators["J0"] = J0;
    r.generators["Jp"] = Jp;
    r.generators["Jm"] = Jm;
    if (qdef) {
        GradedMatrix qJ0(n, par, ctx), qJ0inv(n, par, ctx);
        for (int i = 0; i < n; ++i) {
            const Rational m = j - i;
            qJ0.at(i, i) = Scalar::q_power(2 * m, ctx);
            qJ0inv.at(i, i) = Scalar::q_power(-2 * m, ctx);
        }
        r.generators["qJ0"] = qJ0;
        r.generators["qJ0inv"] = qJ0inv;
    }
    return r;
}

// diagonal q^{alpha J0 / 2} in the spin-j rep
inline GradedMatrix sl2_q_cartan(const Representation& r, const Rational& alpha) {
    const auto& J0 = r.gen("J0");
    GradedMatrix out(r.dim, r.parity, r.ctx);
    for (int i = 0; i < r.dim; ++i) {
        const Rational m2 = J0.at(i, i).rational_value();  // 2m
        out.at(i, i) = Scalar::q_power(alpha * m2 / 2, r.ctx);
    }
    return out;
}

// ---- sl(N) fundamental -----------------------------------------------------

inline Representation slN_fund(int N, const ScalarContext* ctx, bool qdef) {
    std::vector<int> par(N, 0);
    Representation r;
    r.algebra_id = (qdef ? "uq_sl" : "sl") + std::to_string(N);
    r.rep_label = "fund";
    r.dim = N;
    r.parity = par;
    r.q_deformed = qdef;
    r.ctx = ctx;
    for (int i = 1; i < N; ++i) {
        r.generators["E" + std::to_string(i)] =
            GradedMatrix::unit(N, i - 1, i, par, ctx);
        r.generators["F" + std::to_string(i)] =
            GradedMatrix::unit(N, i, i - 1, par, ctx);
        GradedMatrix H(N, par, ctx);
        H.at(i - 1, i - 1) = Scalar::from_int(1, ctx);
        H.at(i, i) = Scalar::from_int(-1, ctx);
        r.generators["H" + std::to_string(i)] = H;
        if (qdef) {
            GradedMatrix K(N, par, ctx), Kinv(N, par, ctx);
            for (int a = 0; a < N; ++a) {
                const Rational hv = a == i - 1 ? 1 : (a == i ? -1 : 0);
                K.at(a, a) = Scalar::q_power(hv, ctx);
                Kinv.at(a, a) = Scalar::q_power(-hv, ctx);
            }
            r.generators["qH" + std::to_string(i)] = K;
            r.generators["qH" + std::to_string(i) + "inv"] = Kinv;
        }
    }
    return r;
}

// ---- osp(1|2) --------------------------------------------------------------

inline Representation osp12_rep(const Rational& j, const ScalarContext* ctx, bool qdef) {
    const long fourj = to_long(j * 4);
    const int n = static_cast<int>(fourj) + 1;
    Representation r;
    r.algebra_id = qdef ? "uq_osp12" : "osp12";
    {
        const long twoj = to_long(j * 2);
        r.rep_label = "j=" + (twoj % 2 ? std::to_string(twoj) + "/2"
                                       : std::to_string(twoj / 2));
    }
    r.dim = n;
    r.q_deformed = qdef;
    r.ctx = ctx;
    // basis index i <-> m = j - i/2 ; parity = 2(j-m) mod 2
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i) par[i] = i % 2;
    r.parity = par;
    GradedMatrix H(n, par, ctx), E(n, par, ctx), F(n, par, ctx);
    for (int i = 0; i < n; ++i) {
        const Rational m = j - rat(i, 2);
        H.at(i, i) = Scalar::from_rational(2 * m, ctx);
        if (i > 0) E.at(i - 1, i) = Scalar::from_int(1, ctx);  // |m> -> |m+1/2>
        if (i < n - 1) {
            const Rational jm = j - m;  // integer or half-integer
            Scalar c;
            if (is_integer(jm)) {
                // f|jm> = -[j+m] [[j-m+1/2]] |j m-1/2>
                c = -(qnumber(QNumberKind::bracket, j + m, ctx) *
                      qnumber(QNumberKind::double_bracket, j - m + rat(1, 2), ctx));
            } else {
                // f|jm> = [[j+m]] [j-m+1/2] |j m-1/2>
                c = qnumber(QNumberKind::double_bracket, j + m, ctx) *
                    qnumber(QNumberKind::bracket, j - m + rat(1, 2), ctx);
            }
            F.at(i + 1, i) = c;
        }
    }
    if (!qdef) {
        H = H.limit_q1();
        E = E.limit_q1();
        F = F.limit_q1();
    }
    r.generators["H"] = H;
    r.generators["E"] = E;
    r.generators["F"] = F;
    r.generators["Bp"] = E * E;
    r.generators["Bm"] = -(F * F);
    if (qdef) {
        GradedMatrix K(n, par, ctx), Kinv(n, par, ctx), t(n, par, ctx), tinv(n, par, ctx);
        for (int i = 0; i < n; ++i) {
            const Rational m = j - rat(i, 2);
            K.at(i, i) = Scalar::q_power(m, ctx);           // q^{H/2}
            Kinv.at(i, i) = Scalar::q_power(-m, ctx);
            t.at(i, i) = Scalar::q_power(2 * m, ctx);       // q^{H}
            tinv.at(i, i) = Scalar::q_power(-2 * m, ctx);
        }
        r.generators["K"] = K;
        r.generators["Kinv"] = Kinv;
        r.generators["t"] = t;
        r.generators["tinv"] = tinv;
    }
    return r;
}

// diagonal q^{alpha H} in an osp q-rep
inline GradedMatrix osp_q_cartan(const Representation& r, const Rational& alpha) {
    const auto& H = r.gen("H");
    GradedMatrix out(r.dim, r.parity, r.ctx);
    for (int i = 0; i < r.dim; ++i)
        out.at(i, i) = Scalar::q_power(alpha * H.at(i, i).rational_value(), r.ctx);
    return out;
}

// ---- sl(2|1) fundamental ----------------------------------------------------

inline Representation sl21_fund(const ScalarContext* ctx, bool qdef) {
    const std::vector<int> par{0, 0, 1};
    Representation r;
    r.algebra_id = qdef ? "uq_sl21" : "sl21";
    r.rep_label = "fund";
    r.dim = 3;
    r.parity = par;
    r.q_deformed = qdef;
    r.ctx = ctx;
    auto U = [&](int i, int j) { return GradedMatrix::unit(3, i, j, par, ctx); };
    GradedMatrix H1(3, par, ctx), H2(3, par, ctx);
    H1.at(0, 0) = Scalar::from_int(1, ctx);
    H1.at(1, 1) = Scalar::from_int(-1, ctx);
    H2.at(1, 1) = Scalar::from_int(1, ctx);
    H2.at(2, 2) = Scalar::from_int(1, ctx);
    r.generators["H1"] = H1;
    r.generators["H2"] = H2;
    r.generators["H3"] = H1 + H2;
    r.generators["E1"] = U(0, 1);
    r.generators["F1"] = U(1, 0);
    r.generators["E2"] = U(1, 2);
    r.generators["F2"] = U(2, 1);
    r.generators["E3"] = super_bracket(U(0, 1), U(1, 2));
    r.generators["F3"] = super_bracket(U(2, 1), U(1, 0));
    if (qdef) {
        auto diagq = [&](const GradedMatrix& Hm, const Rational& a) {
            GradedMatrix out(3, par, ctx);
            for (int i = 0; i < 3; ++i)
                out.at(i, i) = Scalar::q_power(a * Hm.at(i, i).rational_value(), ctx);
            return out;
        };
        r.generators["K1"] = diagq(H1, rat(1, 2));
        r.generators["K1inv"] = diagq(H1, rat(-1, 2));
        r.generators["K2"] = diagq(H2, rat(1, 2));
        r.generators["K2inv"] = diagq(H2, rat(-1, 2));
    }
    return r;
}

// ---- adjoint from a classical presentation ---------------------------------

// ad(x)y = [x,y] on the Lie closure of the presentation generators.
// Structure constants are extracted by exact linear algebra in a faithful
// catalog representation; brackets that leave the closed span raise
// NotClosed. For Serre-type presentations (simple generators only) the
// basis closes onto the full root system, e.g. 8 elements for sl(3).
inline Representation adjoint_rep(const AlgebraPresentation& p, const ScalarContext* ctx) {
    std::vector<int> par;
    std::vector<std::string> names;
    for (const auto& g : p.generators) {
        names.push_back(g.name);
        par.push_back(g.parity);
    }
    // faithful auxiliary representation matched by catalog name
    Representation aux;
    if (p.name == "classical_sl21") aux = sl21_fund(ctx, false);
    else if (p.name == "classical_osp12") aux = osp12_rep(1, ctx, false);
    else if (p.name.rfind("classical_slN_", 0) == 0)
        aux = slN_fund(std::stoi(p.name.substr(14)), ctx, false);
    else throw UnknownRep("adjoint_rep: no classical catalog match for " + p.name);

    std::vector<GradedMatrix> basis;
    for (const auto& nm : names) basis.push_back(aux.gen(nm));
    const int d = aux.dim;

    // exact solve M = sum c_k basis_k; nullopt when outside the span
    auto decompose = [&](const GradedMatrix& M)
        -> std::optional<std::vector<Scalar>> {
        const int rows = d * d, cols = static_cast<int>(basis.size());
        std::vector<std::vector<Scalar>> A(rows, std::vector<Scalar>(cols + 1));
        for (int r2 = 0; r2 < rows; ++r2) {
            for (int c = 0; c < cols; ++c) A[r2][c] = basis[c].at(r2 / d, r2 % d);
            A[r2][cols] = M.at(r2 / d, r2 % d);
        }
        std::vector<int> pivot_col;
        int prow = 0;
        for (int c = 0; c < cols && prow < rows; ++c) {
            int sel = -1;
            for (int r2 = prow; r2 < rows; ++r2)
                if (!A[r2][c].is_zero()) { sel = r2; break; }
            if (sel < 0) continue;
            std::swap(A[prow], A[sel]);
            const Scalar inv = A[prow][c].inverse();
            for (int cc = c; cc <= cols; ++cc) A[prow][cc] = A[prow][cc] * inv;
            for (int r2 = 0; r2 < rows; ++r2) {
                if (r2 == prow || A[r2][c].is_zero()) continue;
                const Scalar f = A[r2][c];
                for (int cc = c; cc <= cols; ++cc)
                    A[r2][cc] = A[r2][cc] - f * A[prow][cc];
            }
            pivot_col.push_back(c);
            ++prow;
        }
        for (int r2 = prow; r2 < rows; ++r2)
            if (!A[r2][cols].is_zero()) return std::nullopt;
        std::vector<Scalar> coeff(static_cast<size_t>(cols), Scalar::from_int(0, ctx));
        for (int k = 0; k < prow; ++k) coeff[pivot_col[k]] = A[k][cols];
        return coeff;
    };

    // close the span under the graded bracket (bounded by dim(End(aux)))
    for (bool grew = true; grew;) {
        grew = false;
        const size_t cur = basis.size();
        for (size_t i = 0; i < cur && !grew; ++i)
            for (size_t j = 0; j < cur && !grew; ++j) {
                const GradedMatrix br = super_bracket(basis[i], basis[j]);
                if (br.is_zero()) continue;
                if (!decompose(br)) {
                    basis.push_back(br);
                    names.push_back("[" + names[i] + "," + names[j] + "]");
                    par.push_back(par[i] ^ par[j]);
                    grew = true;
                    if (basis.size() > static_cast<size_t>(d) * d)
                        throw NotClosed("bracket closure does not stabilize");
                }
            }
    }

    const int n = static_cast<int>(basis.size());
    Representation r;
    r.algebra_id = p.name + ":adjoint";
    r.rep_label = "adjoint";
    r.dim = n;
    r.parity = par;
    r.ctx = ctx;
    for (int i = 0; i < n; ++i) {
        GradedMatrix ad(n, par, ctx);
        for (int j = 0; j < n; ++j) {
            const GradedMatrix br = super_bracket(basis[i], basis[j]);
            auto coeff = decompose(br);
            if (!coeff) throw NotClosed("bracket leaves the generator span");
            for (int k = 0; k < n; ++k) ad.at(k, j) = (*coeff)[k];
        }
        r.generators[names[i]] = ad;
    }
    // derived root generators for the super families
    if (p.name == "classical_sl21") {
        r.generators["E3"] = super_bracket(r.gen("E1"), r.gen("E2"));
        r.generators["F3"] = super_bracket(r.gen("F2"), r.gen("F1"));
        r.generators["H3"] = r.gen("H1") + r.gen("H2");
        r.algebra_id = "sl21";
    }
    if (p.name.rfind("classical_slN_", 0) == 0) r.algebra_id = "sl" + p.name.substr(14);
    if (p.name == "classical_osp12") r.algebra_id = "osp12";
    return r;
}

// ---- tensor representation --------------------------------------------------

enum class CoproductChoice { classical, from_presentation };

// classical: x (x) 1 + 1 (x) x on every generator common to both factors
inline Representation tensor_rep(const Representation& r1, const Representation& r2,
                                 CoproductChoice choice = CoproductChoice::classical,
                                 const AlgebraPresentation* pres = nullptr) {
    Representation out;
    out.algebra_id = r1.algebra_id;
    out.rep_label = r1.rep_label + "(x)" + r2.rep_label;
    out.dim = r1.dim * r2.dim;
    out.parity = parity_kron(r1.parity, r2.parity);
    out.ctx = r1.ctx;
    out.q_deformed = r1.q_deformed;
    const GradedMatrix I1 = GradedMatrix::identity(r1.dim, r1.parity, r1.ctx);
    const GradedMatrix I2 = GradedMatrix::identity(r2.dim, r2.parity, r2.ctx);
    if (choice == CoproductChoice::classical) {
        for (const auto& [nm, M1] : r1.generators) {
            auto it = r2.generators.find(nm);
            if (it == r2.generators.end()) continue;
            out.generators[nm] = graded_kron(M1, I2) + graded_kron(I1, it->second);
        }
        return out;
    }
    if (!pres) throw UnknownRep("tensor_rep: presentation required");
    for (const auto& [nm, d] : pres->coproducts) {
        if (!r1.generators.count(nm)) continue;
        GradedMatrix acc(out.dim, out.parity, out.ctx);
        for (const auto& t : d.terms)
            acc += graded_kron(eval_expr(t.left, r1.generators, r1.ctx),
                               eval_expr(t.right, r2.generators, r2.ctx));
        out.generators[nm] = acc;
    }
    for (const auto& g : pres->generators) {
        const std::string inv = pres->inverse_of(g.name);
        if (inv.empty() || pres->coproducts.count(g.name)) continue;
        if (!r1.generators.count(g.name) || !r2.generators.count(g.name)) continue;
        out.generators[g.name] =
            graded_kron(r1.gen(g.name), r2.gen(g.name));  // group-like
    }
    return out;
}

// ---- catalog front door ------------------------------------------------------

inline Representation classical_rep(const std::string& algebra_id,
                                    const std::string& rep_label,
                                    const ScalarContext* ctx) {
    if (rep_label == "adjoint") {
        if (algebra_id == "sl21") return adjoint_rep(builtin("classical_sl21"), ctx);
        if (algebra_id == "osp12") return adjoint_rep(builtin("classical_osp12"), ctx);
        if (algebra_id.rfind("sl", 0) == 0) {
            const int N = std::stoi(algebra_id.substr(2));
            if (N >= 2 && N <= 6)
                return adjoint_rep(builtin("classical_slN_" + std::to_string(N)), ctx);
        }
        throw UnknownRep("unknown adjoint " + algebra_id);
    }
    if (algebra_id == "sl2") {
        const Rational j = detail_reps::parse_spin(rep_label);
        if (to_long(j * 2) < 1 || to_long(j * 2) > 6)
            throw UnknownRep("sl2 catalog covers spins 1/2..3 only");
        return sl2_rep(j, ctx, false);
    }
    if (algebra_id == "sl21" && rep_label == "fund") return sl21_fund(ctx, false);
    if (algebra_id == "osp12") {
        const Rational j = detail_reps::parse_spin(rep_label);
        if (to_long(j * 2) < 1 || to_long(j * 2) > 3)
            throw UnknownRep("osp12 catalog covers 2j in {1,2,3}");
        return osp12_rep(j, ctx, false);
    }
    if (algebra_id.rfind("sl", 0) == 0 && rep_label == "fund") {
        const int N = std::stoi(algebra_id.substr(2));
        if (N >= 2 && N <= 6) return slN_fund(N, ctx, false);
    }
    throw UnknownRep("unknown classical representation " + algebra_id + ":" + rep_label);
}

inline Representation q_rep(const std::string& algebra_id, const std::string& rep_label,
                            const ScalarContext* ctx) {
    if (algebra_id == "uq_sl2" || algebra_id == "sl2") {
        const Rational j = detail_reps::parse_spin(rep_label);
        if (to_long(j * 2) < 1 || to_long(j * 2) > 6)
            throw UnknownRep("sl2 catalog covers spins 1/2..3 only");
        return sl2_rep(j, ctx, true);
    }
    if ((algebra_id == "uq_sl21" || algebra_id == "sl21") && rep_label == "fund")
        return sl21_fund(ctx, true);
    if (algebra_id == "uq_osp12" || algebra_id == "osp12") {
        const Rational j = detail_reps::parse_spin(rep_label);
        if (to_long(j * 2) < 1 || to_long(j * 2) > 3)
            throw UnknownRep("osp12 catalog covers 2j in {1,2,3}");
        return osp12_rep(j, ctx, true);
    }
    std::string id = algebra_id;
    if (id.rfind("uq_", 0) == 0) id = id.substr(3);
    if (id.rfind("sl", 0) == 0 && rep_label == "fund") {
        const int N = std::stoi(id.substr(2));
        if (N >= 2 && N <= 6) return slN_fund(N, ctx, true);
    }
    throw UnknownRep("unknown q-representation " + algebra_id + ":" + rep_label);
}

}  // namespace qjord
