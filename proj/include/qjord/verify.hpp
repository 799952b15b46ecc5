#pragma once

// Identity verification at representation level: relation suites, Hopf
// axioms, R-matrix properties, FRT relations, twist identities. Verdicts are
// exact; a nonzero evaluation of a stored identity is retried against the
// discrepancy ledger's documented variant before being reported as a failure.

#include <nlohmann/json.hpp>

#include "contraction.hpp"

namespace qjord {

enum class Verdict { holds, fails, holds_with_variant };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::holds_with_variant: return "holds_with_variant";
    }
    return "?";
}

struct IdentityReport {
    std::string name;
    Verdict verdict = Verdict::holds;
    std::string residual;      // canonical strings of the nonzero entries
    std::string variant_note;  // ledger note when holds_with_variant
};

struct VerificationReport {
    std::string suite;
    std::vector<IdentityReport> entries;

    bool all_hold() const {
        for (const auto& e : entries)
            if (e.verdict == Verdict::fails) return false;
        return true;
    }
    int count(Verdict v) const {
        int n = 0;
        for (const auto& e : entries) n += e.verdict == v;
        return n;
    }
    void sort_entries() {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; });
    }
};

// ---- discrepancy ledger -------------------------------------------------------

// One entry documents one typo-event; it may cover several identity keys
// (mirrored relations produced by the same slip). Keys look like
// "suite:kind:name" with kind in {relation, coproduct, antipode, rmatrix}.
struct LedgerEntry {
    std::string note;
    std::map<std::string, std::string> variants;  // key -> replacement text ("" = note-only)
};

class Ledger {
  public:
    Ledger() = default;

    static Ledger from_json(const std::string& text) {
        Ledger l;
        auto j = nlohmann::json::parse(text);
        for (const auto& e : j.at("entries")) {
            LedgerEntry ent;
            ent.note = e.at("note").get<std::string>();
            if (e.contains("variants"))
                for (auto it = e["variants"].begin(); it != e["variants"].end(); ++it)
                    ent.variants[it.key()] = it.value().get<std::string>();
            l.entries_.push_back(std::move(ent));
        }
        return l;
    }
    static Ledger builtin();

    const LedgerEntry* find(const std::string& key) const {
        for (const auto& e : entries_)
            if (e.variants.count(key)) return &e;
        return nullptr;
    }
    size_t size() const { return entries_.size(); }
    const std::vector<LedgerEntry>& entries() const { return entries_; }

  private:
    std::vector<LedgerEntry> entries_;
};

// default discrepancy ledger shipped with the library
inline const char* builtin_ledger_json = R"JSON({
  "entries": [
    {
      "note": "last term of the [H,Y] display: sign of (h/4) F (T - T^-1) E flips; the stored form fails for dim >= 5 representations, the flipped form holds in all catalog representations",
      "variants": {
        "uh_osp12_super:relation:hy": "[H, Y] + 1/2*(T + Tinv)*Y + 1/2*Y*(T + Tinv) + 1/4*h*E*(T - Tinv)*F - 1/4*h*F*(T - Tinv)*E"
      }
    },
    {
      "note": "[F1,F3] and [F2,F3]: the h*T*F term carries coefficient 1/2, not 1 (mirrored pair; stored form fails on both fundamental and adjoint)",
      "variants": {
        "uh_sl3:relation:f1f3": "[F1, F3] - 1/2*h*T*F1 + h*E2*F3 - 1/4*h^2*T*E2",
        "uh_sl3:relation:f2f3": "[F2, F3] - 1/2*h*T*F2 - h*E1*F3 + 1/4*h^2*T*E1"
      }
    },
    {
      "note": "[T,F1]: the display forces one sign for both T and Tinv; the T side needs the opposite sign (classical limit [T,F1] ~ +h*h1)",
      "variants": {
        "uh_sl21:relation:tf1": "[T, F1] - 1/2*h*(H1*T + T*H1)"
      }
    },
    {
      "note": "[H1,H2] and [H1,H3] evaluate to -+(1/2)(T - T^-1)^2; the displayed -+(1/4)(T - T^-1)H1 has the wrong order in h and fails in every catalog representation",
      "variants": {
        "uh_sl21:relation:h1h2": "[H1, H2] - 1/2*(T - Tinv)^2",
        "uh_sl21:relation:h1h3": "[H1, H3] + 1/2*(T - Tinv)^2"
      }
    },
    {
      "note": "[H1,F3]: leading term enters with -(1/2) F3 (T + T^-1) (the displayed + contradicts the classical limit [h1,f3] = -f3)",
      "variants": {
        "uh_sl21:relation:h1f3": "[H1, F3] + 1/2*F3*(T + Tinv) - 1/4*h*(H1*(T - Tinv) + (T - Tinv)*H1)*F2"
      }
    },
    {
      "note": "[H3,F1]: leading term enters with -(1/4)(T + T^-1)^2 F1 (the displayed + contradicts the classical limit [h3,f1] = -f1)",
      "variants": {
        "uh_sl21:relation:h3f1": "[H3, F1] + 1/4*(T + Tinv)^2*F1 - 1/4*h*(T - Tinv)*H1^2 - 1/4*h*(T^2 - Tinv^2)*H1 - 1/16*h*(T^2 - Tinv^2)*(T + Tinv)"
      }
    },
    {
      "note": "[H2,E2] and [H3,F3]: the odd-root coefficient is (h/8)(T^3 - T^-1), not (h/16)(T - T^-1)(T^2 - T^-2) (mirrored pair)",
      "variants": {
        "uh_sl21:relation:h2e2": "[H2, E2] - 1/8*h*(T^3 - Tinv)*E3 - 1/8*(T - Tinv)^2*E2",
        "uh_sl21:relation:h3f3": "[H3, F3] - 1/8*h*(T^3 - Tinv)*F2 + 1/8*(T - Tinv)^2*F3"
      }
    },
    {
      "note": "U_h(sl(N)) at N = 2: the Cartan-F relation splits into the ordered combination (3/2) T^-1 [F1,T] H1 + (1/2) [F1,T] T^-1 H1; the displayed 2 T^-1 [F1,T] H1 fails in the fundamental",
      "variants": {
        "uh_slN_2:relation:h1f1": "[H1, F1] + 2*F1 - 3/2*Tinv*[F1, T]*H1 - 1/2*[F1, T]*Tinv*H1"
      }
    },
    {
      "note": "coproduct of H3 is displayed with H2 on the right-hand side; the homomorphism and coassociativity axioms hold with H3",
      "variants": {
        "uh_sl21:coproduct:H3": "H3 (x) 1 + 1 (x) H3 - 1/4*T*H1 (x) (1 - T^2) - 1/4*(1 - Tinv^2) (x) Tinv*H1"
      }
    },
    {
      "note": "S(F3) is displayed with E3 in the correction term; the antipode axiom holds with F2",
      "variants": {
        "uh_sl21:antipode:F3": "-F3 + 1/2*h*(T + Tinv)*F2"
      }
    },
    {
      "note": "the super-Jordanian osp(1|2) sector intertwines with the opposite comultiplication: the contracted R (which reproduces the displayed matrices) satisfies R Delta^op = Delta R; equivalently R_21 satisfies the standard direction. Present already between the displayed R_q and Delta_q",
      "variants": {
        "osp:rmatrix:intertwine": ""
      }
    },
    {
      "note": "map-level choices fixed by the relation suites: osp super map uses Y = -F^2 (display prints Y = F^2 while the algebra demands F^2 = -Y); the sl(2) completion uses Y = J- - (h^2/4) J+ (J0^2 - 1) (display omits the operator sign); the minimal-twist antipode transform closed form equals mu(S x id)G (display names mu(id x S)); the hdiag antipode series is 1 - hX + (h^2/2)X^2 + O(h^3) (display omits the identity term)",
      "variants": {
        "deform:map:osp_super_Y": "",
        "deform:map:sl2_Y": "",
        "twist:map:g_mu_side": "",
        "twist:map:g_hdiag_identity": ""
      }
    }
  ]
})JSON";

inline Ledger Ledger::builtin() { return Ledger::from_json(builtin_ledger_json); }

// ---- helpers -------------------------------------------------------------------

struct GeneratorAssignment {
    Assignment matrices;
    const ScalarContext* ctx = nullptr;
};

inline GeneratorAssignment assignment_from(const DeformedGeneratorSet& s) {
    return {s.generators, s.ctx()};
}
inline GeneratorAssignment assignment_from(const Representation& r) {
    return {r.generators, r.ctx};
}

namespace detail_verify {

inline std::string residual_string(const GradedMatrix& M, int max_entries = 4) {
    std::ostringstream os;
    int shown = 0;
    for (int i = 0; i < M.dim() && shown < max_entries; ++i)
        for (int j = 0; j < M.dim() && shown < max_entries; ++j)
            if (!M.at(i, j).is_zero()) {
                if (shown) os << "; ";
                os << "(" << i + 1 << "," << j + 1 << ")=" << M.at(i, j).to_string();
                ++shown;
            }
    return os.str();
}

}  // namespace detail_verify

// ---- relation suites --------------------------------------------------------------

inline VerificationReport verify_relations(const AlgebraPresentation& p,
                                           const GeneratorAssignment& a,
                                           const Ledger& ledger = Ledger::builtin()) {
    VerificationReport rep;
    rep.suite = p.name;
    for (const auto& r : p.relations) {
        IdentityReport ir;
        ir.name = r.name;
        try {
            const GradedMatrix m = eval_expr(r.expr, a.matrices, a.ctx);
            if (m.is_zero()) {
                ir.verdict = Verdict::holds;
            } else if (const LedgerEntry* le = ledger.find(p.name + ":relation:" + r.name)) {
                const ExprPtr variant =
                    parse_expression(le->variants.at(p.name + ":relation:" + r.name));
                const GradedMatrix mv = eval_expr(variant, a.matrices, a.ctx);
                if (mv.is_zero()) {
                    ir.verdict = Verdict::holds_with_variant;
                    ir.variant_note = le->note;
                } else {
                    ir.verdict = Verdict::fails;
                    ir.residual = detail_verify::residual_string(mv);
                }
            } else {
                ir.verdict = Verdict::fails;
                ir.residual = detail_verify::residual_string(m);
            }
        } catch (const std::exception& e) {
            ir.verdict = Verdict::fails;
            ir.residual = std::string("evaluation error: ") + e.what();
        }
        rep.entries.push_back(std::move(ir));
    }
    rep.sort_entries();
    return rep;
}

// ---- coalgebra ----------------------------------------------------------------------

// Working coalgebra tables with ledger overrides applied; identities touched
// by an override report holds_with_variant.
struct CoalgebraTables {
    std::map<std::string, CoproductDecl> coproducts;
    std::map<std::string, ExprPtr> antipodes;
    std::map<std::string, Scalar> counits;
    std::map<std::string, std::string> variant_notes;  // generator -> ledger note
    std::vector<std::string> generators;               // with coalgebra data, decl order
};

inline CoalgebraTables coalgebra_tables(const AlgebraPresentation& p,
                                        const ScalarContext* ctx, const Ledger& ledger) {
    CoalgebraTables t;
    for (const auto& g : p.generators) {
        CoproductDecl cop;
        bool have_cop = false;
        if (auto it = p.coproducts.find(g.name); it != p.coproducts.end()) {
            cop = it->second;
            have_cop = true;
        } else if (p.has_implied_coalgebra(g.name)) {
            cop.terms.push_back({mk_sym(g.name), mk_sym(g.name)});  // group-like
            have_cop = true;
        }
        const std::string ck = p.name + ":coproduct:" + g.name;
        if (const LedgerEntry* le = ledger.find(ck)) {
            qalg::Parser prs("algebra x; generator z even; coproduct z = " +
                             le->variants.at(ck) + ";");
            // parse the variant through a wrapper presentation
            // (cheap reuse of the texpr grammar)
            try {
                // construct wrapper with the real generator names
                std::string wrapper = "algebra w;\n";
                for (const auto& gg : p.generators)
                    if (!gg.is_inverse_of_pair) {
                        wrapper += "generator " + gg.name + (gg.parity ? " odd" : " even");
                        if (!gg.inverse.empty()) wrapper += " inverse " + gg.inverse;
                        wrapper += ";\n";
                    }
                wrapper += "coproduct " + g.name + " = " + le->variants.at(ck) + ";\n";
                AlgebraPresentation wp = parse_presentation(wrapper);
                cop = wp.coproducts.at(g.name);
                have_cop = true;
                t.variant_notes[g.name] = le->note;
            } catch (const std::exception&) {
            }
        }
        if (have_cop) {
            t.coproducts[g.name] = cop;
            t.generators.push_back(g.name);
        }
        // antipode
        ExprPtr s;
        if (auto it = p.antipodes.find(g.name); it != p.antipodes.end()) s = it->second;
        else if (p.has_implied_coalgebra(g.name)) s = mk_sym(p.inverse_of(g.name));
        const std::string sk = p.name + ":antipode:" + g.name;
        if (const LedgerEntry* le = ledger.find(sk)) {
            s = parse_expression(le->variants.at(sk));
            t.variant_notes[g.name] = le->note;
        }
        if (s) t.antipodes[g.name] = s;
        // counit
        if (auto it = p.counits.find(g.name); it != p.counits.end())
            t.counits[g.name] = eval_counit(it->second, {}, ctx);
        else if (p.has_implied_coalgebra(g.name))
            t.counits[g.name] = Scalar::from_int(1, ctx);
    }
    return t;
}

// Delta(g) evaluated with independent leg assignments
inline GradedMatrix eval_coproduct(const CoproductDecl& d, const Assignment& leg1,
                                   const Assignment& leg2, const ScalarContext* ctx) {
    GradedMatrix acc;
    bool first = true;
    for (const auto& term : d.terms) {
        const GradedMatrix l = eval_expr(term.left, leg1, ctx);
        const GradedMatrix r = eval_expr(term.right, leg2, ctx);
        const GradedMatrix m = graded_kron(l, r);
        acc = first ? m : acc + m;
        first = false;
    }
    return acc;
}

// the four Hopf-axiom families, evaluated on V, V (x) V, V (x) V (x) V
inline VerificationReport verify_coalgebra(const AlgebraPresentation& p,
                                           const GeneratorAssignment& a,
                                           const Ledger& ledger = Ledger::builtin()) {
    VerificationReport rep;
    rep.suite = p.name + ":coalgebra";
    const ScalarContext* ctx = a.ctx;
    CoalgebraTables t = coalgebra_tables(p, ctx, ledger);
    const Assignment& pi = a.matrices;

    auto push = [&](const std::string& name, bool ok, const std::string& gen,
                    const GradedMatrix* resid) {
        IdentityReport ir;
        ir.name = name;
        if (ok) {
            if (t.variant_notes.count(gen)) {
                ir.verdict = Verdict::holds_with_variant;
                ir.variant_note = t.variant_notes.at(gen);
            } else {
                ir.verdict = Verdict::holds;
            }
        } else {
            ir.verdict = Verdict::fails;
            if (resid) ir.residual = detail_verify::residual_string(*resid);
        }
        rep.entries.push_back(std::move(ir));
    };

    // per-generator Delta on V (x) V
    Assignment delta;
    for (const auto& g : t.generators)
        delta[g] = eval_coproduct(t.coproducts.at(g), pi, pi, ctx);
    const bool full_cover = delta.size() == pi.size();

    // (i) homomorphism: Delta applied to every relation vanishes
    if (full_cover) {
        for (const auto& r : p.relations) {
            GradedMatrix m(0, {}, ctx);
            std::string used_variant;
            try {
                ExprPtr expr = r.expr;
                const std::string rk = p.name + ":relation:" + r.name;
                if (const LedgerEntry* le = ledger.find(rk)) {
                    expr = parse_expression(le->variants.at(rk));
                    used_variant = le->note;
                }
                m = eval_expr(expr, delta, ctx);
                IdentityReport ir;
                ir.name = "hom:" + r.name;
                if (m.is_zero()) {
                    ir.verdict = used_variant.empty() ? Verdict::holds
                                                      : Verdict::holds_with_variant;
                    ir.variant_note = used_variant;
                } else {
                    ir.verdict = Verdict::fails;
                    ir.residual = detail_verify::residual_string(m);
                }
                rep.entries.push_back(std::move(ir));
            } catch (const std::exception& e) {
                IdentityReport ir;
                ir.name = "hom:" + r.name;
                ir.verdict = Verdict::fails;
                ir.residual = std::string("evaluation error: ") + e.what();
                rep.entries.push_back(std::move(ir));
            }
        }
    }

    // (ii) coassociativity on V (x) V (x) V
    for (const auto& g : t.generators) {
        const GradedMatrix lhs = eval_coproduct(t.coproducts.at(g), delta, pi, ctx);
        const GradedMatrix rhs = eval_coproduct(t.coproducts.at(g), pi, delta, ctx);
        const GradedMatrix d = lhs - rhs;
        push("coassoc:" + g, d.is_zero(), g, &d);
    }

    // (iii) counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    for (const auto& g : t.generators) {
        if (!t.counits.count(g)) continue;
        const auto& d = t.coproducts.at(g);
        GradedMatrix accL(pi.begin()->second.dim(), pi.begin()->second.parity(), ctx);
        GradedMatrix accR = accL;
        bool ok = true;
        try {
            for (const auto& term : d.terms) {
                accL += eval_expr(term.right, pi, ctx) *
                        eval_counit(term.left, t.counits, ctx);
                accR += eval_expr(term.left, pi, ctx) *
                        eval_counit(term.right, t.counits, ctx);
            }
            const GradedMatrix& target = pi.at(g);
            ok = (accL == target) && (accR == target);
            const GradedMatrix dd = accL - target;
            push("counit:" + g, ok, g, &dd);
        } catch (const std::exception&) {
            push("counit:" + g, false, g, nullptr);
        }
    }

    // (iv) antipode: mu(S (x) id) Delta = eps(.) 1 = mu(id (x) S) Delta
    Assignment s_images;
    bool have_all_antipodes = true;
    const auto gp = p.parity_table();
    for (const auto& g : t.generators) {
        if (!t.antipodes.count(g)) {
            have_all_antipodes = false;
            continue;
        }
        try {
            s_images[g] = eval_expr(t.antipodes.at(g), pi, ctx);
        } catch (const std::exception&) {
            have_all_antipodes = false;
        }
    }
    if (have_all_antipodes && s_images.size() == pi.size()) {
        const GradedMatrix I =
            GradedMatrix::identity(pi.begin()->second.dim(), pi.begin()->second.parity(), ctx);
        for (const auto& g : t.generators) {
            const auto& d = t.coproducts.at(g);
            GradedMatrix accL(I.dim(), I.parity(), ctx);
            GradedMatrix accR = accL;
            bool ok = true;
            try {
                for (const auto& term : d.terms) {
                    accL += eval_antipode(term.left, s_images, gp, ctx) *
                            eval_expr(term.right, pi, ctx);
                    accR += eval_expr(term.left, pi, ctx) *
                            eval_antipode(term.right, s_images, gp, ctx);
                }
                const GradedMatrix target = I * t.counits.at(g);
                ok = (accL == target) && (accR == target);
                const GradedMatrix dd = accL - target;
                push("antipode:" + g, ok, g, &dd);
            } catch (const std::exception&) {
                push("antipode:" + g, false, g, nullptr);
            }
        }
    }
    rep.sort_entries();
    return rep;
}

// ---- R-matrix properties ----------------------------------------------------------

// graded Yang-Baxter on V1 (x) V1 (x) V2 legs built from R on V1 (x) V2:
// here specialized to equal legs (tensor cube), the acceptance usage.
inline bool graded_ybe(const GradedMatrix& R, const std::vector<int>& p,
                       const ScalarContext* ctx) {
    const int n = static_cast<int>(p.size());
    const GradedMatrix I = GradedMatrix::identity(n, p, ctx);
    const GradedMatrix R12 = plain_kron(R, I);  // R is an even operator
    const GradedMatrix R23 = plain_kron(I, R);
    const GradedMatrix P23 = plain_kron(I, graded_flip(p, p, ctx));
    const GradedMatrix R13 = P23 * R12 * P23;
    return (R12 * R13 * R23 - R23 * R13 * R12).is_zero();
}

inline VerificationReport verify_rmatrix(const RMatrixResult& R,
                                         const AlgebraPresentation* p,
                                         const GeneratorAssignment* leg1,
                                         const GeneratorAssignment* leg2,
                                         const Ledger& ledger = Ledger::builtin(),
                                         bool check_ybe_cube = true) {
    VerificationReport rep;
    rep.suite = R.family + ":rmatrix";
    const ScalarContext* ctx = R.matrix.context();

    // (ii) triangularity R21 R = 1 with the graded flip
    {
        const GradedMatrix P = graded_flip(R.parity1, R.parity2, ctx);
        const GradedMatrix R21 = P * R.matrix * P;
        const GradedMatrix I = GradedMatrix::identity(
            R.matrix.dim(), R.matrix.parity(), ctx);
        const GradedMatrix d = R21 * R.matrix - I;
        IdentityReport ir;
        ir.name = "triangularity";
        ir.verdict = d.is_zero() ? Verdict::holds : Verdict::fails;
        if (!d.is_zero()) ir.residual = detail_verify::residual_string(d);
        rep.entries.push_back(std::move(ir));
    }
    // (i) graded YBE on the cube (legs equal; caller passes a square R)
    if (check_ybe_cube && R.dim1 == R.dim2 && R.parity1 == R.parity2) {
        IdentityReport ir;
        ir.name = "ybe";
        ir.verdict = graded_ybe(R.matrix, R.parity1, ctx) ? Verdict::holds : Verdict::fails;
        rep.entries.push_back(std::move(ir));
    }
    // (iii) intertwining R Delta(x) = Delta^op(x) R
    if (p && leg1 && leg2) {
        CoalgebraTables t = coalgebra_tables(*p, ctx, ledger);
        const GradedMatrix P = graded_flip(R.parity1, R.parity2, ctx);
        const LedgerEntry* flip_note = ledger.find(R.family + ":rmatrix:intertwine");
        for (const auto& g : t.generators) {
            if (!leg1->matrices.count(g) || !leg2->matrices.count(g)) continue;
            const GradedMatrix D =
                eval_coproduct(t.coproducts.at(g), leg1->matrices, leg2->matrices, ctx);
            const GradedMatrix Dop = P * D * P;
            IdentityReport ir;
            ir.name = "intertwine:" + g;
            const bool direct = (R.matrix * D - Dop * R.matrix).is_zero();
            if (direct) {
                ir.verdict = t.variant_notes.count(g) ? Verdict::holds_with_variant
                                                      : Verdict::holds;
                if (t.variant_notes.count(g)) ir.variant_note = t.variant_notes.at(g);
            } else if (flip_note && (R.matrix * Dop - D * R.matrix).is_zero()) {
                ir.verdict = Verdict::holds_with_variant;
                ir.variant_note = flip_note->note;
            } else {
                ir.verdict = Verdict::fails;
                const GradedMatrix d = R.matrix * D - Dop * R.matrix;
                ir.residual = detail_verify::residual_string(d);
            }
            rep.entries.push_back(std::move(ir));
        }
    }
    rep.sort_entries();
    return rep;
}

// ---- FRT -----------------------------------------------------------------------------

// RLL on V_aux (x) V_aux (x) V_j (graded YBE-style leg embeddings), and the
// coalgebraic properties of L: Delta(L) = L (x). L, eps(L) = 1, S(L) = L^-1.
// L entries are given as expressions over the presentation's symbols.
inline VerificationReport verify_frt(
    const std::vector<std::vector<ExprPtr>>& L_expr, const std::vector<int>& p_aux,
    const RMatrixResult& R_half_half, const RMatrixResult& L_matrix,
    const RMatrixResult& L_inv, const AlgebraPresentation& pres,
    const GeneratorAssignment& a, const Ledger& ledger = Ledger::builtin()) {
    VerificationReport rep;
    rep.suite = "osp:frt";
    const ScalarContext* ctx = a.ctx;
    const int naux = static_cast<int>(p_aux.size());
    const std::vector<int>& pV = L_matrix.parity2;
    const int nV = L_matrix.dim2;

    {   // RLL
        const GradedMatrix IV = GradedMatrix::identity(nV, pV, ctx);
        const GradedMatrix Iaux = GradedMatrix::identity(naux, p_aux, ctx);
        const GradedMatrix L23 = plain_kron(Iaux, L_matrix.matrix);  // L even overall
        const GradedMatrix P12 = plain_kron(graded_flip(p_aux, p_aux, ctx), IV);
        const GradedMatrix L13 = P12 * L23 * P12;
        const GradedMatrix R12 = plain_kron(R_half_half.matrix, IV);
        const GradedMatrix d = R12 * L13 * L23 - L23 * L13 * R12;
        IdentityReport ir;
        ir.name = "rll";
        ir.verdict = d.is_zero() ? Verdict::holds : Verdict::fails;
        if (!d.is_zero()) ir.residual = detail_verify::residual_string(d);
        rep.entries.push_back(std::move(ir));
    }
    {   // L L^-1 = 1
        const GradedMatrix I = GradedMatrix::identity(
            L_matrix.matrix.dim(), L_matrix.matrix.parity(), ctx);
        IdentityReport ir;
        ir.name = "l_inverse";
        ir.verdict = (L_matrix.matrix * L_inv.matrix - I).is_zero() ? Verdict::holds
                                                                    : Verdict::fails;
        rep.entries.push_back(std::move(ir));
    }
    CoalgebraTables t = coalgebra_tables(pres, ctx, ledger);
    // Delta(L_ij) = sum_k L_ik (x) L_kj
    {
        Assignment delta;
        for (const auto& g : t.generators)
            delta[g] = eval_coproduct(t.coproducts.at(g), a.matrices, a.matrices, ctx);
        bool ok = true;
        for (int i = 0; i < naux && ok; ++i)
            for (int j = 0; j < naux && ok; ++j) {
                const GradedMatrix lhs = eval_expr(L_expr[i][j], delta, ctx);
                GradedMatrix rhs(nV * nV, parity_kron(pV, pV), ctx);
                for (int k = 0; k < naux; ++k) {
                    const GradedMatrix A = eval_expr(L_expr[i][k], a.matrices, ctx);
                    const GradedMatrix B = eval_expr(L_expr[k][j], a.matrices, ctx);
                    if (A.is_zero() || B.is_zero()) continue;
                    rhs += graded_kron(A, B);
                }
                ok = (lhs - rhs).is_zero();
            }
        IdentityReport ir;
        ir.name = "delta_l";
        ir.verdict = ok ? Verdict::holds : Verdict::fails;
        rep.entries.push_back(std::move(ir));
    }
    {   // eps(L) = identity pattern
        bool ok = true;
        for (int i = 0; i < naux && ok; ++i)
            for (int j = 0; j < naux && ok; ++j) {
                const Scalar v = eval_counit(L_expr[i][j], t.counits, ctx);
                const Scalar want = Scalar::from_int(i == j ? 1 : 0, ctx);
                ok = (v == want);
            }
        IdentityReport ir;
        ir.name = "eps_l";
        ir.verdict = ok ? Verdict::holds : Verdict::fails;
        rep.entries.push_back(std::move(ir));
    }
    {   // S(L) = L^-1 entrywise (graded anti-homomorphism through the table)
        Assignment s_images;
        const auto gp = pres.parity_table();
        for (const auto& g : t.generators)
            if (t.antipodes.count(g))
                s_images[g] = eval_expr(t.antipodes.at(g), a.matrices, ctx);
        bool ok = true;
        for (int i = 0; i < naux && ok; ++i)
            for (int j = 0; j < naux && ok; ++j) {
                const GradedMatrix lhs = eval_antipode(L_expr[i][j], s_images, gp, ctx);
                GradedMatrix want(nV, pV, ctx);
                for (int k = 0; k < nV; ++k)
                    for (int l = 0; l < nV; ++l)
                        want.at(k, l) = L_inv.matrix.at(i * nV + k, j * nV + l);
                ok = (lhs - want).is_zero();
            }
        IdentityReport ir;
        ir.name = "s_l";
        ir.verdict = ok ? Verdict::holds : Verdict::fails;
        rep.entries.push_back(std::move(ir));
    }
    rep.sort_entries();
    return rep;
}

// ---- twist identities -----------------------------------------------------------------

namespace detail_twist {

// classical images e, h, f of the inverse map, as matrices on a deformed set
struct InverseImages {
    GradedMatrix e, h, f;
};

inline InverseImages inverse_images(const DeformedGeneratorSet& s, JordanianVariant v) {
    const Representation r = inverse_osp_jordanian(s, v);
    return {r.gen("E"), r.gen("H"), r.gen("F")};
}

// the same images evaluated through Delta: every generator replaced by its
// coproduct matrix; series pieces rebuilt from the Delta'd T-family
inline InverseImages inverse_images_delta(const DeformedGeneratorSet& s, JordanianVariant v,
                                          const Assignment& delta,
                                          const ScalarContext* ctx) {
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r2) { return Scalar::from_rational(r2, ctx); };
    const GradedMatrix &T = delta.at("T"), &Ti = delta.at("Tinv"), &E = delta.at("E"),
                       &H = delta.at("H"), &F = delta.at("F");
    const GradedMatrix &Th = delta.at("Thalf"), &Thi = delta.at("Thalfinv");
    if (v == JordanianVariant::minimal) {
        return {Thi * E, T * H,
                Th * F + Th * (T - Ti) * E * (hh * c(rat(1, 8))) -
                    Th * E * H * (hh * c(rat(1, 2)))};
    }
    const GradedMatrix ch = (Th + Thi) * c(rat(1, 2));
    const GradedMatrix sh2 = (Th - Thi) * c(rat(1, 2));
    const GradedMatrix shX = (T - Ti) * c(rat(1, 2));
    const GradedMatrix sech = nil_apply(series::neumann_inv(), ch);
    return {sech * E, H,
            ch * F + shX * ch * E * (hh * c(rat(1, 4))) + sh2 * E * H * (hh * c(rat(1, 2)))};
}

}  // namespace detail_twist

// Twist identities for the Jordanian osp(1|2) maps:
//  - minimal (exact): cocommutativity of the twisted coproduct on the
//    inverse-map images, cocycle condition on the triple tensor,
//    g = mu(id (x) S) G against the closed form (ledger: mu(S (x) id) is the
//    side that matches), the antipode transform, and the disentanglement
//    identity;
//  - hdiag (order <= 2): the twist relation mod h^{order+1}.
inline VerificationReport verify_twist(JordanianVariant v, const DeformedGeneratorSet& a,
                                       const DeformedGeneratorSet& b, int order = -1,
                                       const Ledger& ledger = Ledger::builtin()) {
    VerificationReport rep;
    rep.suite = v == JordanianVariant::minimal ? "osp_jordanian_minimal:twist"
                                               : "osp_jordanian_hdiag:twist";
    const ScalarContext* ctx = a.ctx();
    const Scalar hh = Scalar::h(ctx);
    auto c = [&](const Rational& r2) { return Scalar::from_rational(r2, ctx); };
    const AlgebraPresentation pres = builtin("uh_osp12_jordanian");
    CoalgebraTables t = coalgebra_tables(pres, ctx, ledger);
    auto delta_of = [&](const DeformedGeneratorSet& x, const DeformedGeneratorSet& y) {
        Assignment d;
        for (const auto& g : t.generators)
            if (x.generators.count(g) && y.generators.count(g))
                d[g] = eval_coproduct(t.coproducts.at(g), x.generators, y.generators, ctx);
        return d;
    };
    auto push = [&](const std::string& name, const GradedMatrix& d) {
        IdentityReport ir;
        ir.name = name;
        ir.verdict = d.is_zero() ? Verdict::holds : Verdict::fails;
        if (!d.is_zero()) ir.residual = detail_verify::residual_string(d);
        rep.entries.push_back(std::move(ir));
    };

    if (v == JordanianVariant::minimal) {
        const TwistOperator tw = twist_operator(v, a, b);
        const GradedMatrix Gi = nil_apply(series::neumann_inv(), tw.G);
        const Assignment delta = delta_of(a, b);
        const auto mi_a = detail_twist::inverse_images(a, v);
        const auto mi_b = detail_twist::inverse_images(b, v);
        const auto mi_d = detail_twist::inverse_images_delta(a, v, delta, ctx);
        const GradedMatrix Ia = GradedMatrix::identity(a.dim(), a.parity(), ctx);
        const GradedMatrix Ib = GradedMatrix::identity(b.dim(), b.parity(), ctx);
        push("cocommutative:e", tw.G * mi_d.e * Gi -
                                    (graded_kron(mi_a.e, Ib) + graded_kron(Ia, mi_b.e)));
        push("cocommutative:h", tw.G * mi_d.h * Gi -
                                    (graded_kron(mi_a.h, Ib) + graded_kron(Ia, mi_b.h)));
        push("cocommutative:f", tw.G * mi_d.f * Gi -
                                    (graded_kron(mi_a.f, Ib) + graded_kron(Ia, mi_b.f)));

        // g against the mu-constructions: sum_k (+-h)^k/k! (TH)^k X^k
        auto mu_series = [&](const GradedMatrix& A, const GradedMatrix& B, int sgn) {
            GradedMatrix out(a.dim(), a.parity(), ctx);
            for (int k = 0;; ++k) {
                GradedMatrix term = (A.pow(k) * B.pow(k)) *
                                    (Scalar::h(ctx).pow(k) *
                                     Scalar::from_rational(Rational(sgn < 0 && k % 2 ? -1 : 1) /
                                                               factorial(k), ctx));
                if (k > 0 && term.is_zero()) break;
                out += term;
                if (k > 2 * a.dim() + 2) break;
            }
            return out;
        };
        const GradedMatrix TH = a.gen("T") * a.gen("H");
        const GradedMatrix g_id_S = mu_series(TH, a.gen("X"), -1);  // mu(id x S)G
        // mu(S x id)G: S(TH) = S(H) S(T)
        const GradedMatrix S_TH =
            (a.gen("H") * c(-1) + a.gen("E") * a.gen("E") * (hh * c(2))) * a.gen("Tinv");
        const GradedMatrix g_S_id = mu_series(S_TH, a.gen("X"), +1);
        {
            IdentityReport ir;
            ir.name = "g_closed_form";
            const LedgerEntry* note = ledger.find("twist:map:g_mu_side");
            if ((g_id_S - tw.g).is_zero()) {
                ir.verdict = Verdict::holds;
            } else if ((g_S_id - tw.g).is_zero() && note) {
                ir.verdict = Verdict::holds_with_variant;
                ir.variant_note = note->note;
            } else {
                ir.verdict = Verdict::fails;
                const GradedMatrix d = g_id_S - tw.g;
                ir.residual = detail_verify::residual_string(d);
            }
            rep.entries.push_back(std::move(ir));
        }
        // antipode transform g S(m(phi)) g^-1 = -m(phi)
        {
            Assignment s_images;
            const auto gp = pres.parity_table();
            for (const auto& g2 : t.generators)
                if (t.antipodes.count(g2) && a.generators.count(g2))
                    s_images[g2] = eval_expr(t.antipodes.at(g2), a.generators, ctx);
            const GradedMatrix gi = nil_apply(series::neumann_inv(), tw.g);
            auto S_of = [&](const char* txt) {
                return eval_antipode(parse_expression(txt), s_images, gp, ctx);
            };
            const GradedMatrix Se = S_of("Thalfinv*E");
            const GradedMatrix Sh = S_of("T*H");
            const GradedMatrix Sf =
                S_of("Thalf*F + 1/8*h*Thalf*(T - Tinv)*E - 1/2*h*Thalf*E*H");
            push("antipode_transform:e", tw.g * Se * gi + mi_a.e);
            push("antipode_transform:h", tw.g * Sh * gi + mi_a.h);
            push("antipode_transform:f", tw.g * Sf * gi + mi_a.f);
        }
        // cocycle (G (x) 1)((Delta (x) id)G) = (1 (x) G)((id (x) Delta)G)
        {
            const Assignment delta_aa = delta_of(a, a);
            const GradedMatrix DTH = delta_aa.at("T") * delta_aa.at("H");
            const std::vector<int> paa = parity_kron(a.parity(), a.parity());
            const GradedMatrix DG = nil_apply(
                series::exp(), graded_kron(DTH, a.gen("X")) * hh);
            // (id x Delta)G = exp(h TH (x) Delta(X)); Delta(X) = X x 1 + 1 x X
            const GradedMatrix DX = graded_kron(a.gen("X"), Ia) + graded_kron(Ia, a.gen("X"));
            const GradedMatrix GD = nil_apply(
                series::exp(),
                detail::gkron_hom(TH, DX, 0) * hh);
            const GradedMatrix Gaa = twist_operator(v, a, a).G;
            const GradedMatrix Gx1 = plain_kron(Gaa, Ia);
            const GradedMatrix x1G = detail::gkron_hom(Ia, Gaa, 0);
            push("cocycle", Gx1 * DG - x1G * GD);
        }
        // disentanglement mu[exp(1/2 h_cl (x) ln(1 - 2h b+))] = exp(-h h_cl b+)
        {
            const Representation& src = a.source_rep;
            const GradedMatrix hcl = src.gen("H");
            const GradedMatrix bp = src.gen("E") * src.gen("E");
            const GradedMatrix I = GradedMatrix::identity(src.dim, src.parity, ctx);
            const GradedMatrix lnpart =
                nil_apply(series::log1p(), bp * (hh * c(-2)));
            GradedMatrix lhs(src.dim, src.parity, ctx);
            for (int k = 0;; ++k) {
                const GradedMatrix term =
                    ((hcl * c(rat(1, 2))).pow(k) * lnpart.pow(k)) *
                    Scalar::from_rational(Rational(1) / factorial(k), ctx);
                if (k > 0 && term.is_zero()) break;
                lhs += term;
                if (k > 2 * src.dim + 2) break;
            }
            const GradedMatrix rhs = nil_apply(series::exp(), hcl * bp * (-hh));
            push("disentanglement", lhs - rhs);
        }
        rep.sort_entries();
        return rep;
    }

    // hdiag: twist relation mod h^{order+1}
    if (order < 0 || order > 2) throw OrderUnavailable("hdiag twist order must be <= 2");
    const TwistOperator tw = twist_operator(v, a, b, order);
    const std::vector<int> pab = parity_kron(a.parity(), b.parity());
    const GradedMatrix Iab = GradedMatrix::identity(a.dim() * b.dim(), pab, ctx);
    // inverse of G modulo h^{order+1}
    GradedMatrix Gi = Iab;
    {
        const GradedMatrix N = tw.G - Iab;
        GradedMatrix acc = Iab, p = Iab;
        for (int k = 1; k <= order; ++k) {
            p = (p * N).truncate_h(order);
            acc += p * Scalar::from_int(k % 2 ? -1 : 1, ctx);
        }
        Gi = acc.truncate_h(order);
    }
    const Assignment delta = delta_of(a, b);
    const auto mi_a = detail_twist::inverse_images(a, v);
    const auto mi_b = detail_twist::inverse_images(b, v);
    const auto mi_d = detail_twist::inverse_images_delta(a, v, delta, ctx);
    const GradedMatrix Ia = GradedMatrix::identity(a.dim(), a.parity(), ctx);
    const GradedMatrix Ib = GradedMatrix::identity(b.dim(), b.parity(), ctx);
    auto check = [&](const char* nm, const GradedMatrix& md, const GradedMatrix& ma,
                     const GradedMatrix& mb) {
        const GradedMatrix lhs = (tw.G * md * Gi).truncate_h(order);
        const GradedMatrix rhs =
            (graded_kron(ma, Ib) + graded_kron(Ia, mb)).truncate_h(order);
        push(std::string("twist_mod_h") + std::to_string(order + 1) + ":" + nm, lhs - rhs);
    };
    check("e", mi_d.e, mi_a.e, mi_b.e);
    check("h", mi_d.h, mi_a.h, mi_b.h);
    check("f", mi_d.f, mi_a.f, mi_b.f);
    rep.sort_entries();
    return rep;
}

// ---- automorphism ---------------------------------------------------------------------

// Phi given as generator -> expression table; every relation (with ledger
// variants applied) must still vanish after substitution.
inline VerificationReport automorphism_check(
    const std::map<std::string, ExprPtr>& phi, const AlgebraPresentation& p,
    const GeneratorAssignment& a, const Ledger& ledger = Ledger::builtin()) {
    VerificationReport rep;
    rep.suite = p.name + ":automorphism";
    Assignment images;
    for (const auto& [g, e] : phi) images[g] = eval_expr(e, a.matrices, a.ctx);
    for (const auto& r : p.relations) {
        IdentityReport ir;
        ir.name = r.name;
        try {
            ExprPtr expr = r.expr;
            std::string note;
            const std::string rk = p.name + ":relation:" + r.name;
            if (const LedgerEntry* le = ledger.find(rk)) {
                expr = parse_expression(le->variants.at(rk));
                note = le->note;
            }
            const GradedMatrix m = eval_expr(expr, images, a.ctx);
            if (m.is_zero()) {
                ir.verdict = note.empty() ? Verdict::holds : Verdict::holds_with_variant;
                ir.variant_note = note;
            } else {
                ir.verdict = Verdict::fails;
                ir.residual = detail_verify::residual_string(m);
            }
        } catch (const std::exception& e) {
            ir.verdict = Verdict::fails;
            ir.residual = std::string("evaluation error: ") + e.what();
        }
        rep.entries.push_back(std::move(ir));
    }
    rep.sort_entries();
    return rep;
}

}  // namespace qjord
