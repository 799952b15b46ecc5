#pragma once

// Expression trees for algebra presentations: generators, scalar literals
// (rationals, h, q with rational powers), sums, products, scalar division,
// integer powers, graded brackets [.,.] and {.,.}.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "graded_matrix.hpp"

namespace qjord {

struct ExpressionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UndeclaredSymbol : ExpressionError {
    using ExpressionError::ExpressionError;
};
struct ParityMismatch : ExpressionError {
    using ExpressionError::ExpressionError;
};
struct EvaluationError : ExpressionError {
    using ExpressionError::ExpressionError;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { num, sym, add, sub, mul, div, neg, pow, bracket, antibracket };
    Kind kind;
    Rational value;        // num
    std::string name;      // sym
    ExprPtr a, b;          // children
    Rational exponent;     // pow (rational only for scalar bases)
    int line = 0, col = 0;
};

inline ExprPtr mk_num(const Rational& v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::num;
    e->value = v;
    return e;
}
inline ExprPtr mk_sym(const std::string& n) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::sym;
    e->name = n;
    return e;
}
inline ExprPtr mk_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
inline ExprPtr mk_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::neg;
    e->a = std::move(a);
    return e;
}
inline ExprPtr mk_pow(ExprPtr a, const Rational& k) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->a = std::move(a);
    e->exponent = k;
    return e;
}

inline bool is_scalar_symbol(const std::string& n) { return n == "h" || n == "q"; }

// scalar-only subtree evaluation; nullopt when a generator occurs
inline std::optional<Scalar> scalar_eval(const ExprPtr& e, const ScalarContext* ctx) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::num:
            return Scalar::from_rational(e->value, ctx);
        case K::sym:
            if (e->name == "h") return Scalar::h(ctx);
            if (e->name == "q") return Scalar::q_power(1, ctx);
            return std::nullopt;
        case K::neg: {
            auto a = scalar_eval(e->a, ctx);
            if (!a) return std::nullopt;
            return -*a;
        }
        case K::add: case K::sub: case K::mul: case K::div: {
            auto a = scalar_eval(e->a, ctx), b = scalar_eval(e->b, ctx);
            if (!a || !b) return std::nullopt;
            if (e->kind == K::add) return *a + *b;
            if (e->kind == K::sub) return *a - *b;
            if (e->kind == K::mul) return *a * *b;
            return *a / *b;
        }
        case K::pow: {
            // q admits rational exponents (q^r = s^{d r}); everything else integral
            if (e->a->kind == K::sym && e->a->name == "q")
                return Scalar::q_power(e->exponent, ctx);
            auto a = scalar_eval(e->a, ctx);
            if (!a) return std::nullopt;
            if (!is_integer(e->exponent))
                throw EvaluationError("rational exponent on non-q scalar");
            return a->pow(static_cast<int>(to_long(e->exponent)));
        }
        case K::bracket: case K::antibracket:
            return std::nullopt;
    }
    return std::nullopt;
}

// parity of an expression under a generator-parity table;
// nullopt = pure scalar. Throws ParityMismatch on inhomogeneous sums.
inline std::optional<int> expr_parity(const ExprPtr& e,
                                      const std::map<std::string, int>& gp) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::num:
            return std::nullopt;
        case K::sym: {
            if (is_scalar_symbol(e->name)) return std::nullopt;
            auto it = gp.find(e->name);
            if (it == gp.end()) throw UndeclaredSymbol("undeclared symbol " + e->name);
            return it->second;
        }
        case K::neg:
            return expr_parity(e->a, gp);
        case K::add: case K::sub: {
            auto a = expr_parity(e->a, gp), b = expr_parity(e->b, gp);
            if (!a) return b;
            if (!b) return a;
            if (*a != *b) throw ParityMismatch("inhomogeneous sum");
            return a;
        }
        case K::mul: case K::bracket: case K::antibracket: {
            auto a = expr_parity(e->a, gp), b = expr_parity(e->b, gp);
            int p = (a ? *a : 0) ^ (b ? *b : 0);
            if (!a && !b) return std::nullopt;
            return p;
        }
        case K::div:
            return expr_parity(e->a, gp);
        case K::pow: {
            auto a = expr_parity(e->a, gp);
            if (!a) return std::nullopt;
            if (!is_integer(e->exponent)) throw EvaluationError("rational power of generator");
            return (*a * to_long(e->exponent)) % 2;
        }
    }
    return std::nullopt;
}

// matrix evaluation under an assignment symbol -> GradedMatrix
using Assignment = std::map<std::string, GradedMatrix>;

inline GradedMatrix eval_expr(const ExprPtr& e, const Assignment& as,
                              const ScalarContext* ctx) {
    using K = Expr::Kind;
    // template matrix for scalar lifting
    const GradedMatrix& any = as.begin()->second;
    auto lift = [&](const Scalar& s) {
        return GradedMatrix::identity(any.dim(), any.parity(), ctx) * s;
    };
    if (auto s = scalar_eval(e, ctx)) return lift(*s);
    switch (e->kind) {
        case K::sym: {
            auto it = as.find(e->name);
            if (it == as.end()) throw UndeclaredSymbol("no assignment for " + e->name);
            return it->second;
        }
        case K::neg:
            return -eval_expr(e->a, as, ctx);
        case K::add:
            return eval_expr(e->a, as, ctx) + eval_expr(e->b, as, ctx);
        case K::sub:
            return eval_expr(e->a, as, ctx) - eval_expr(e->b, as, ctx);
        case K::mul: {
            auto sa = scalar_eval(e->a, ctx);
            if (sa) return eval_expr(e->b, as, ctx) * *sa;
            auto sb = scalar_eval(e->b, ctx);
            if (sb) return eval_expr(e->a, as, ctx) * *sb;
            return eval_expr(e->a, as, ctx) * eval_expr(e->b, as, ctx);
        }
        case K::div: {
            auto sb = scalar_eval(e->b, ctx);
            if (!sb) throw EvaluationError("division by non-scalar expression");
            return eval_expr(e->a, as, ctx).divide_by(*sb);
        }
        case K::pow: {
            if (!is_integer(e->exponent) || e->exponent < 0)
                throw EvaluationError("generator power must be a nonnegative integer");
            return eval_expr(e->a, as, ctx).pow(static_cast<int>(to_long(e->exponent)));
        }
        case K::bracket:
            return super_bracket(eval_expr(e->a, as, ctx), eval_expr(e->b, as, ctx), false);
        case K::antibracket:
            return super_bracket(eval_expr(e->a, as, ctx), eval_expr(e->b, as, ctx), true);
        default:
            throw EvaluationError("unexpected node");
    }
}

// graded anti-homomorphic evaluation: generators replaced by their antipode
// images, with products reversed and Koszul signs inserted:
// S(ab) = (-1)^{|a||b|} S(b) S(a).
inline GradedMatrix eval_antipode(const ExprPtr& e, const Assignment& antipode_images,
                                  const std::map<std::string, int>& gp,
                                  const ScalarContext* ctx) {
    using K = Expr::Kind;
    const GradedMatrix& any = antipode_images.begin()->second;
    auto lift = [&](const Scalar& s) {
        return GradedMatrix::identity(any.dim(), any.parity(), ctx) * s;
    };
    if (auto s = scalar_eval(e, ctx)) return lift(*s);
    auto par = [&](const ExprPtr& x) {
        auto p = expr_parity(x, gp);
        return p ? *p : 0;
    };
    switch (e->kind) {
        case K::sym: {
            auto it = antipode_images.find(e->name);
            if (it == antipode_images.end())
                throw UndeclaredSymbol("no antipode image for " + e->name);
            return it->second;
        }
        case K::neg:
            return -eval_antipode(e->a, antipode_images, gp, ctx);
        case K::add:
            return eval_antipode(e->a, antipode_images, gp, ctx) +
                   eval_antipode(e->b, antipode_images, gp, ctx);
        case K::sub:
            return eval_antipode(e->a, antipode_images, gp, ctx) -
                   eval_antipode(e->b, antipode_images, gp, ctx);
        case K::mul: {
            auto sa = scalar_eval(e->a, ctx);
            if (sa) return eval_antipode(e->b, antipode_images, gp, ctx) * *sa;
            auto sb = scalar_eval(e->b, ctx);
            if (sb) return eval_antipode(e->a, antipode_images, gp, ctx) * *sb;
            GradedMatrix sa_m = eval_antipode(e->a, antipode_images, gp, ctx);
            GradedMatrix sb_m = eval_antipode(e->b, antipode_images, gp, ctx);
            GradedMatrix out = sb_m * sa_m;  // reversed
            if (par(e->a) == 1 && par(e->b) == 1) out = -out;
            return out;
        }
        case K::div: {
            auto sb = scalar_eval(e->b, ctx);
            if (!sb) throw EvaluationError("division by non-scalar expression");
            return eval_antipode(e->a, antipode_images, gp, ctx).divide_by(*sb);
        }
        case K::pow: {
            const long k = to_long(e->exponent);
            if (k < 0) throw EvaluationError("negative generator power");
            GradedMatrix base = eval_antipode(e->a, antipode_images, gp, ctx);
            GradedMatrix out = base.pow(static_cast<int>(k));
            // reversing x^k gives (-1)^{|x| k(k-1)/2} S(x)^k
            if (par(e->a) == 1 && ((k * (k - 1) / 2) % 2 == 1)) out = -out;
            return out;
        }
        case K::bracket: case K::antibracket: {
            // S([a,b]) = [S(b), S(a)]-type: expand via multiplication rule
            GradedMatrix sa_m = eval_antipode(e->a, antipode_images, gp, ctx);
            GradedMatrix sb_m = eval_antipode(e->b, antipode_images, gp, ctx);
            const int pa = par(e->a), pb = par(e->b);
            // S(ab) = (-1)^{pa pb} S(b)S(a); S(ba) = (-1)^{pa pb} S(a)S(b)
            GradedMatrix s_ab = (pa & pb) ? -(sb_m * sa_m) : sb_m * sa_m;
            GradedMatrix s_ba = (pa & pb) ? -(sa_m * sb_m) : sa_m * sb_m;
            const bool anti = e->kind == Expr::Kind::antibracket ||
                              (pa == 1 && pb == 1);
            return anti ? s_ab + s_ba : s_ab - s_ba;
        }
        default:
            throw EvaluationError("unexpected node");
    }
}

// counit evaluation: generators replaced by scalars
inline Scalar eval_counit(const ExprPtr& e, const std::map<std::string, Scalar>& eps,
                          const ScalarContext* ctx) {
    using K = Expr::Kind;
    if (auto s = scalar_eval(e, ctx)) return *s;
    switch (e->kind) {
        case K::sym: {
            auto it = eps.find(e->name);
            if (it == eps.end()) throw UndeclaredSymbol("no counit for " + e->name);
            return it->second;
        }
        case K::neg: return -eval_counit(e->a, eps, ctx);
        case K::add: return eval_counit(e->a, eps, ctx) + eval_counit(e->b, eps, ctx);
        case K::sub: return eval_counit(e->a, eps, ctx) - eval_counit(e->b, eps, ctx);
        case K::mul: return eval_counit(e->a, eps, ctx) * eval_counit(e->b, eps, ctx);
        case K::div: return eval_counit(e->a, eps, ctx) / eval_counit(e->b, eps, ctx);
        case K::pow: {
            Scalar b = eval_counit(e->a, eps, ctx);
            if (e->a->kind == K::sym && e->a->name == "q")
                return Scalar::q_power(e->exponent, ctx);
            return b.pow(static_cast<int>(to_long(e->exponent)));
        }
        case K::bracket: {
            Scalar x = eval_counit(e->a, eps, ctx), y = eval_counit(e->b, eps, ctx);
            return x * y - y * x;  // zero, kept for form
        }
        case K::antibracket: {
            Scalar x = eval_counit(e->a, eps, ctx), y = eval_counit(e->b, eps, ctx);
            return x * y + y * x;
        }
        default:
            throw EvaluationError("unexpected node");
    }
}

// structural equality of expression trees
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::num: return a->value == b->value;
        case Expr::Kind::sym: return a->name == b->name;
        case Expr::Kind::neg: return expr_equal(a->a, b->a);
        case Expr::Kind::pow:
            return a->exponent == b->exponent && expr_equal(a->a, b->a);
        default:
            return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    }
}

}  // namespace qjord
