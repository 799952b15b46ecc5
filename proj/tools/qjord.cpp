// qjord command-line front end: run verification suites, perform q -> 1
// contractions, and export matrices/reports.
//
// Exit codes: 0 = all verdicts hold (possibly with documented variants),
//             1 = at least one identity fails,
//             2 = usage, I/O, or engine error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {

Ledger load_ledger() {
    if (const char* path = std::getenv("QJORD_LEDGER")) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open ledger file ") + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return Ledger::from_json(ss.str());
    }
    return Ledger::builtin();
}

struct RepSelector {
    std::string algebra, label;
};

RepSelector parse_selector(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos)
        throw std::runtime_error("rep selector must look like algebra:label, got " + s);
    return {s.substr(0, pos), s.substr(pos + 1)};
}

Representation load_classical(const RepSelector& sel, const ScalarContext* ctx) {
    return classical_rep(sel.algebra, sel.label, ctx);
}

// deformation-map selector: slN:<n> | osp_super | osp_jordanian:minimal |
// osp_jordanian:hdiag | sl21
DeformedGeneratorSet apply_map(const std::string& map_sel, const Representation& rep) {
    if (map_sel.rfind("slN:", 0) == 0)
        return deform_slN(rep, std::stoi(map_sel.substr(4)));
    if (map_sel == "osp_super") return deform_osp_super(rep);
    if (map_sel == "osp_jordanian:minimal")
        return deform_osp_jordanian(rep, JordanianVariant::minimal);
    if (map_sel == "osp_jordanian:hdiag")
        return deform_osp_jordanian(rep, JordanianVariant::hdiag);
    if (map_sel == "sl21") return deform_sl21(rep);
    throw std::runtime_error("unknown map selector " + map_sel);
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string spin_label(const std::string& family, const std::string& spin) {
    if (family == "osp") return "j=" + spin;
    if (family == "sl2") return "spin-" + spin;
    return spin;  // fund etc.
}

std::string family_algebra(const std::string& family) {
    if (family == "sl2") return "sl2";
    if (family == "sl3") return "sl3";
    if (family == "osp") return "osp12";
    if (family == "sl21") return "sl21";
    throw std::runtime_error("unknown family " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qjord: Jordanian quantum (super)algebras, exactly"};
    app.require_subcommand(1);

    int root_degree = 6;
    std::string h_spec;
    app.add_option("--root-degree", root_degree, "q = s^d root degree (default 6)");
    app.add_option("--h", h_spec, "specialize h to a rational value (e.g. 3/7)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a relation / Hopf-axiom suite");
    std::string v_pres, v_map, v_rep, v_format = "table", v_out;
    bool v_coalgebra = false;
    verify->add_option("presentation", v_pres, "builtin name or .qalg file path")->required();
    verify->add_option("--map", v_map, "deformation map (slN:2, osp_super, ...)");
    verify->add_option("--rep", v_rep, "source representation algebra:label");
    verify->add_flag("--coalgebra", v_coalgebra, "also run the Hopf-axiom suite");
    verify->add_option("--format", v_format, "table | json");
    verify->add_option("--out", v_out, "output path (default stdout)");

    // contract
    auto* contract_cmd = app.add_subcommand("contract", "q -> 1 contraction of R_q");
    std::string c_family, c_reps, c_format = "json", c_out;
    contract_cmd->add_option("family", c_family, "sl2 | sl3 | osp | sl21")->required();
    contract_cmd->add_option("--reps", c_reps, "rep pair, e.g. 1/2,1 or fund,fund")
        ->required();
    contract_cmd->add_option("--format", c_format, "json | table");
    contract_cmd->add_option("--out", c_out, "output path");

    // show-r
    auto* showr = app.add_subcommand("show-r", "R_h by any route");
    std::string s_family, s_reps, s_route = "closed", s_format = "table", s_out;
    std::string s_variant = "minimal";
    showr->add_option("family", s_family, "sl2 | sl3 | slN:<n> | osp | osp_jordanian | sl21")
        ->required();
    showr->add_option("--reps", s_reps, "rep pair")->required();
    showr->add_option("--route", s_route, "contracted | closed | universal");
    showr->add_option("--variant", s_variant, "osp_jordanian map variant");
    showr->add_option("--format", s_format, "json | table");
    showr->add_option("--out", s_out, "output path");

    // dump-builtin
    auto* dump = app.add_subcommand("dump-builtin", "print a builtin .qalg source");
    std::string d_name;
    dump->add_option("name", d_name, "builtin presentation name")->required();

    // export
    auto* exp = app.add_subcommand("export", "export representation matrices as JSON");
    std::string e_rep, e_map, e_gen, e_format = "json", e_out;
    exp->add_option("rep", e_rep, "representation selector algebra:label")->required();
    exp->add_option("--map", e_map, "apply a deformation map first");
    exp->add_option("--gen", e_gen, "a single generator (default: all)");
    exp->add_option("--format", e_format, "json | table");
    exp->add_option("--out", e_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ScalarContext ctx;
        ctx.root_degree = root_degree;
        if (!h_spec.empty()) {
            Rational hv(h_spec);
            hv.canonicalize();
            ctx.h_value = hv;
        }
        const Ledger ledger = load_ledger();

        if (*verify) {
            AlgebraPresentation p;
            try {
                p = builtin(v_pres);
            } catch (const UnknownPresentation&) {
                std::ifstream in(v_pres);
                if (!in) throw;
                std::stringstream ss;
                ss << in.rdbuf();
                p = parse_presentation(ss.str());
            }
            GeneratorAssignment a;
            if (!v_rep.empty()) {
                const RepSelector sel = parse_selector(v_rep);
                if (!v_map.empty()) {
                    a = assignment_from(apply_map(v_map, load_classical(sel, &ctx)));
                } else if (p.name.rfind("uq_", 0) == 0) {
                    a = assignment_from(q_rep(sel.algebra, sel.label, &ctx));
                } else {
                    a = assignment_from(load_classical(sel, &ctx));
                }
            } else {
                throw std::runtime_error("verify needs --rep");
            }
            VerificationReport r = verify_relations(p, a, ledger);
            std::string text = render_report(r, v_format);
            bool ok = r.all_hold();
            if (v_coalgebra) {
                VerificationReport rc = verify_coalgebra(p, a, ledger);
                text += render_report(rc, v_format);
                ok = ok && rc.all_hold();
            }
            write_out(text, v_out);
            return ok ? 0 : 1;
        }

        if (*contract_cmd) {
            const auto parts = split_commas(c_reps);
            if (parts.size() != 2) throw std::runtime_error("--reps needs two entries");
            const std::string alg = family_algebra(c_family);
            const Representation r1 = q_rep(alg, spin_label(c_family, parts[0]), &ctx);
            const Representation r2 = q_rep(alg, spin_label(c_family, parts[1]), &ctx);
            RMatrixResult R = contract(c_family, r1, r2);
            write_out(export_matrix(R, c_format), c_out);
            return 0;
        }

        if (*showr) {
            const auto parts = split_commas(s_reps);
            if (parts.size() != 2) throw std::runtime_error("--reps needs two entries");
            RMatrixResult R;
            if (s_route == "contracted") {
                const std::string alg = family_algebra(s_family);
                R = contract(s_family,
                             q_rep(alg, spin_label(s_family, parts[0]), &ctx),
                             q_rep(alg, spin_label(s_family, parts[1]), &ctx));
            } else if (s_route == "closed") {
                const std::string alg = family_algebra(s_family);
                const Representation r2 =
                    load_classical({alg, spin_label(s_family, parts[1])}, &ctx);
                DeformedGeneratorSet set =
                    s_family == "sl2"   ? deform_slN(r2, 2)
                    : s_family == "sl3" ? deform_slN(r2, 3)
                    : s_family == "osp" ? deform_osp_super(r2)
                                        : deform_sl21(r2);
                R = closed_rh(s_family, set);
            } else if (s_route == "universal") {
                std::string fam = s_family;
                int N = fam == "sl2" ? 2 : fam == "sl3" ? 3 : 0;
                if (fam.rfind("slN:", 0) == 0) {
                    N = std::stoi(fam.substr(4));
                    fam = "slN";
                }
                auto mk = [&](const std::string& spin) -> DeformedGeneratorSet {
                    if (fam == "sl2")
                        return deform_slN(load_classical({"sl2", spin_label("sl2", spin)}, &ctx), 2);
                    if (fam == "sl3" || fam == "slN") {
                        const std::string alg = "sl" + std::to_string(N);
                        return deform_slN(load_classical({alg, spin}, &ctx), N);
                    }
                    if (fam == "sl21")
                        return deform_sl21(load_classical({"sl21", spin}, &ctx));
                    if (fam == "osp_jordanian")
                        return deform_osp_jordanian(
                            load_classical({"osp12", spin_label("osp", spin)}, &ctx),
                            s_variant == "hdiag" ? JordanianVariant::hdiag
                                                 : JordanianVariant::minimal);
                    throw std::runtime_error("universal route: unknown family " + fam);
                };
                R = universal_rh(fam == "sl3" || fam == "slN" ? (N == 2 ? "sl2" : "slN") : fam,
                                 mk(parts[0]), mk(parts[1]));
            } else {
                throw std::runtime_error("unknown route " + s_route);
            }
            write_out(export_matrix(R, s_format), s_out);
            return 0;
        }

        if (*dump) {
            std::cout << builtin_source(d_name);
            return 0;
        }

        if (*exp) {
            const RepSelector sel = parse_selector(e_rep);
            std::map<std::string, GradedMatrix> gens;
            std::string family = sel.algebra;
            if (!e_map.empty()) {
                DeformedGeneratorSet s = apply_map(e_map, load_classical(sel, &ctx));
                gens = s.generators;
                family = s.algebra_id + ":" + s.variant;
            } else {
                gens = load_classical(sel, &ctx).generators;
            }
            if (!e_gen.empty()) {
                write_out(export_generator(gens.at(e_gen), family, sel.label, e_format), e_out);
                return 0;
            }
            nlohmann::json j;
            for (const auto& [nm, m] : gens) {
                RMatrixResult r{m, family, sel.label, sel.label, m.parity(), m.parity(),
                                m.dim(), m.dim(), RRoute::closed_form};
                j[nm] = matrix_to_json(r);
            }
            write_out(j.dump(1) + "\n", e_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "qjord: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
