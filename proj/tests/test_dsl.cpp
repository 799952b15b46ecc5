#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;
}

TEST_CASE("basic parse") {
    auto p = parse_presentation(
        "algebra tiny;\n"
        "generator T even inverse Tinv;\n"
        "relation unit: T*Tinv - 1;\n");
    CHECK(p.name == "tiny");
    CHECK(p.relations.size() == 1);
    CHECK(p.generators.size() == 2);  // T and the implied Tinv
    CHECK(p.inverse_of("T") == "Tinv");
    CHECK(p.inverse_of("Tinv") == "T");
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_presentation("algebra bad;\ngenerator X even;\nrelation r: [X, ;\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse_presentation("algebra a;\ngenerator X even;\nrelation r: Y;\n"),
                    UndeclaredSymbol);
    CHECK_THROWS_AS(
        parse_presentation("algebra a;\ngenerator X even;\ngenerator O odd;\n"
                           "relation r: X + O;\n"),
        ParityMismatch);
}

TEST_CASE("all builtins parse, serialize, and round-trip") {
    for (const auto& nm : builtin_names()) {
        AlgebraPresentation p = builtin(nm);
        const std::string text = serialize(p);
        AlgebraPresentation p2 = parse_presentation(text);
        INFO(nm);
        CHECK(presentations_equal(p, p2));
        // canonical ordering: serialize is a fixed point
        CHECK(serialize(p2) == text);
    }
    CHECK(builtin("ohn_sl2").relations.size() == 3);
    CHECK(builtin("ohn_sl2").coproducts.size() == 3);
    CHECK_THROWS_AS(builtin("nonexistent"), UnknownPresentation);
    // alias form
    CHECK(builtin("uh_slN(4)").name == "uh_slN_4");
}

TEST_CASE("empty relation list round-trips") {
    auto p = parse_presentation("algebra none;\ngenerator X even;\n");
    CHECK(p.relations.empty());
    CHECK(presentations_equal(p, parse_presentation(serialize(p))));
}

namespace {

// well-formed fuzz generator
struct Fuzzer {
    std::mt19937 rng;
    std::vector<std::string> gens;
    std::vector<int> pars;

    explicit Fuzzer(unsigned seed) : rng(seed) {}

    int ri(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    std::string scalar() {
        switch (ri(0, 3)) {
            case 0: return std::to_string(ri(1, 9));
            case 1: return std::to_string(ri(1, 5)) + "/" + std::to_string(ri(2, 7));
            case 2: return "h^" + std::to_string(ri(-2, 3));
            default: return "q^(" + std::to_string(ri(-2, 2)) + "/2)";
        }
    }
    std::string expr(int parity, int depth) {
        if (depth <= 0) {
            std::vector<int> idx;
            for (size_t i = 0; i < gens.size(); ++i)
                if (pars[i] == parity) idx.push_back(static_cast<int>(i));
            if (idx.empty()) return parity == 0 ? "1" : gens[0];
            return gens[idx[ri(0, static_cast<int>(idx.size()) - 1)]];
        }
        switch (ri(0, 4)) {
            case 0:
                return "(" + expr(parity, depth - 1) + " + " + expr(parity, depth - 1) + ")";
            case 1:
                return "(" + expr(parity, depth - 1) + " - " + expr(parity, depth - 1) + ")";
            case 2: {
                const int p1 = ri(0, 1);
                return expr(p1, depth - 1) + "*" + expr(parity ^ p1, depth - 1);
            }
            case 3: {
                const int p1 = ri(0, 1);
                return "[" + expr(p1, depth - 1) + ", " + expr(parity ^ p1, depth - 1) + "]";
            }
            default:
                return scalar() + "*" + expr(parity, depth - 1);
        }
    }
    std::string presentation(int id) {
        gens.clear();
        pars.clear();
        std::ostringstream os;
        os << "algebra fuzz" << id << ";\n";
        const int ng = ri(2, 5);
        for (int i = 0; i < ng; ++i) {
            gens.push_back("g" + std::to_string(i));
            pars.push_back(ri(0, 1));
            os << "generator " << gens.back() << (pars.back() ? " odd" : " even") << ";\n";
        }
        const int nr = ri(1, 5);
        for (int i = 0; i < nr; ++i)
            os << "relation r" << i << ": " << expr(ri(0, 1), ri(1, 3)) << ";\n";
        const int nc = ri(0, ng);
        for (int i = 0; i < nc; ++i) {
            os << "coproduct " << gens[i] << " = " << expr(pars[i], 1) << " (x) "
               << expr(0, 1) << " + " << expr(0, 1) << " (x) " << expr(pars[i], 1) << ";\n";
            os << "antipode " << gens[i] << " = -" << gens[i] << ";\n";
            os << "counit " << gens[i] << " = 0;\n";
        }
        return os.str();
    }
};

}  // namespace

TEST_CASE("1000-case well-formed fuzz corpus round-trips") {
    Fuzzer fz(7);
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::string text = fz.presentation(i);
        INFO(text);
        AlgebraPresentation p;
        REQUIRE_NOTHROW(p = parse_presentation(text));
        AlgebraPresentation p2 = parse_presentation(serialize(p));
        REQUIRE(presentations_equal(p, p2));
        ++ok;
    }
    CHECK(ok == 1000);
}

TEST_CASE("malformed corpus gives SyntaxError with a position, never a crash") {
    Fuzzer fz(11);
    std::mt19937 rng(13);
    int syntax_errors = 0, other = 0, accepted = 0;
    for (int i = 0; i < 400; ++i) {
        std::string text = fz.presentation(i);
        std::uniform_int_distribution<size_t> pos(0, text.size() - 1);
        switch (i % 4) {
            case 0: text = text.substr(0, pos(rng)); break;
            case 1: text.insert(pos(rng), "]]"); break;
            case 2: text.insert(pos(rng), ";;relation"); break;
            default: text.erase(pos(rng), 3); break;
        }
        try {
            parse_presentation(text);
            ++accepted;  // a mutation may stay well-formed
        } catch (const SyntaxError& e) {
            CHECK(e.line >= 1);
            CHECK(e.col >= 1);
            ++syntax_errors;
        } catch (const ExpressionError&) {
            ++other;  // undeclared symbols / parity clashes are fine too
        }
    }
    CHECK(syntax_errors > 100);
    CHECK(syntax_errors + other + accepted == 400);
}

TEST_CASE("expression evaluation against hand values") {
    const Representation f = sl21_fund(&ctx, false);
    const ExprPtr e = parse_expression("[E1, F1] - H1");
    CHECK(eval_expr(e, f.generators, &ctx).is_zero());
    const ExprPtr e2 = parse_expression("1/2*h^-1*(H1*H1 - H1*H1)");
    CHECK(eval_expr(e2, f.generators, &ctx).is_zero());
    const ExprPtr e3 = parse_expression("H1/E1");
    CHECK_THROWS_AS(eval_expr(e3, f.generators, &ctx), EvaluationError);
}
