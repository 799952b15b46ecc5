#pragma once

// Terminating series of nilpotent matrices, and truncated formal power
// series in one (nilpotent) variable used by the osp(1|2) map families.

#include <functional>
#include <string>

#include "graded_matrix.hpp"

namespace qjord {

// coefficient rule k -> Scalar coefficient of x^k
struct SeriesDef {
    std::string id;
    std::function<Scalar(int, const ScalarContext*)> coeff;
};

namespace series {

inline SeriesDef binom(const Rational& alpha) {
    return {"binom(" + rat_str(alpha) + ")",
            [alpha](int k, const ScalarContext* c) {
                return Scalar::from_rational(rational_binomial(alpha, k), c);
            }};
}
inline SeriesDef sqrt1p() { auto s = binom(rat(1, 2)); s.id = "sqrt1p"; return s; }
inline SeriesDef invsqrt1p() { auto s = binom(rat(-1, 2)); s.id = "invsqrt1p"; return s; }
// (1+N)^-1 applied to the nilpotent part
inline SeriesDef neumann_inv() { auto s = binom(rat(-1)); s.id = "neumann_inv"; return s; }
inline SeriesDef exp() {
    return {"exp", [](int k, const ScalarContext* c) {
                return Scalar::from_rational(Rational(1) / factorial(k), c);
            }};
}
inline SeriesDef log1p() {
    return {"log1p", [](int k, const ScalarContext* c) {
                if (k == 0) return Scalar::from_int(0, c);
                Rational r = Rational((k % 2 == 0) ? -1 : 1) / k;
                return Scalar::from_rational(r, c);
            }};
}
inline SeriesDef arcsinh() {
    return {"arcsinh", [](int k, const ScalarContext* c) {
                if (k % 2 == 0) return Scalar::from_int(0, c);
                const int m = (k - 1) / 2;
                Rational r = factorial(2 * m);
                Rational den = factorial(m) * factorial(m) * Rational(2 * m + 1);
                for (int i = 0; i < m; ++i) den *= 4;
                r /= den;
                if (m % 2 == 1) r = -r;
                return Scalar::from_rational(r, c);
            }};
}
// E_{q^b}(x) = sum x^n / [n]_{q^b}!   (deformed exponential)
inline SeriesDef qexp(int base_exp = 1) {
    return {"qexp(" + std::to_string(base_exp) + ")",
            [base_exp](int k, const ScalarContext* c) {
                return Scalar::from_int(1, c) /
                       qnumber(QNumberKind::bracket_fact, Rational(k), c, base_exp);
            }};
}
// exp_{q^b}(x) = sum x^n / {n}_{q^b}!
inline SeriesDef qexp_brace(int base_exp = 1) {
    return {"qexp_brace(" + std::to_string(base_exp) + ")",
            [base_exp](int k, const ScalarContext* c) {
                return Scalar::from_int(1, c) /
                       qnumber(QNumberKind::brace_fact, Rational(k), c, base_exp);
            }};
}
inline SeriesDef sinh() {
    return {"sinh", [](int k, const ScalarContext* c) {
                if (k % 2 == 0) return Scalar::from_int(0, c);
                return Scalar::from_rational(Rational(1) / factorial(k), c);
            }};
}
inline SeriesDef cosh() {
    return {"cosh", [](int k, const ScalarContext* c) {
                if (k % 2 == 1) return Scalar::from_int(0, c);
                return Scalar::from_rational(Rational(1) / factorial(k), c);
            }};
}

}  // namespace series

// exact finite sum sum_k c_k M^k; M (or M - I for neumann_inv) must be
// nilpotent, otherwise NotNilpotent
inline GradedMatrix nil_apply(const SeriesDef& s, const GradedMatrix& M) {
    GradedMatrix arg = M;
    if (s.id == "neumann_inv") {
        arg = M - GradedMatrix::identity(M.dim(), M.parity(), M.context());
    }
    const ScalarContext* ctx = M.context();
    GradedMatrix out(M.dim(), M.parity(), ctx);
    GradedMatrix p = GradedMatrix::identity(M.dim(), M.parity(), ctx);
    for (int k = 0;; ++k) {
        out += p * s.coeff(k, ctx);
        p = p * arg;
        if (p.is_zero()) break;
        if (k > M.dim() + 1)
            throw NotNilpotent("series argument is not nilpotent (id=" + s.id + ")");
    }
    return out;
}

// ---- truncated formal power series in one commuting nilpotent variable ----
// Coefficients are Scalars; everything beyond `order` powers is dropped
// (the variable's nilpotency index in the target representation).
class FormalSeries {
  public:
    FormalSeries() = default;
    FormalSeries(int order, const ScalarContext* ctx) : ctx_(ctx), c_(order) {
        for (auto& x : c_) x = Scalar::from_int(0, ctx);
    }
    static FormalSeries constant(const Scalar& v, int order, const ScalarContext* ctx) {
        FormalSeries f(order, ctx);
        if (order > 0) f.c_[0] = v;
        return f;
    }
    static FormalSeries variable(int order, const ScalarContext* ctx) {
        FormalSeries f(order, ctx);
        if (order > 1) f.c_[1] = Scalar::from_int(1, ctx);
        return f;
    }
    static FormalSeries from_rule(const SeriesDef& s, int order, const ScalarContext* ctx) {
        FormalSeries f(order, ctx);
        for (int k = 0; k < order; ++k) f.c_[k] = s.coeff(k, ctx);
        return f;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const Scalar& operator[](int k) const { return c_[k]; }
    Scalar& operator[](int k) { return c_[k]; }

    FormalSeries operator+(const FormalSeries& o) const {
        FormalSeries out = *this;
        for (int k = 0; k < order(); ++k) out.c_[k] += o.c_[k];
        return out;
    }
    FormalSeries operator-(const FormalSeries& o) const {
        FormalSeries out = *this;
        for (int k = 0; k < order(); ++k) out.c_[k] -= o.c_[k];
        return out;
    }
    FormalSeries operator*(const FormalSeries& o) const {
        FormalSeries out(order(), ctx_);
        for (int i = 0; i < order(); ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; i + j < order(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
        }
        return out;
    }
    FormalSeries operator*(const Scalar& s) const {
        FormalSeries out = *this;
        for (auto& x : out.c_) x *= s;
        return out;
    }
    // division; divisor must have invertible constant term, or (exact = true)
    // the dividend must be divisible by the variable first
    FormalSeries operator/(const FormalSeries& o) const {
        FormalSeries num = *this, den = o;
        int shift = 0;
        while (shift < den.order() && den.c_[shift].is_zero()) ++shift;
        if (shift == den.order()) throw ScalarError("series division by zero");
        if (shift > 0) {
            for (int k = 0; k < shift; ++k)
                if (!num.c_[k].is_zero())
                    throw InexactDivision("series not divisible by x^" + std::to_string(shift));
            FormalSeries n2(order(), ctx_), d2(order(), ctx_);
            for (int k = shift; k < order(); ++k) {
                n2.c_[k - shift] = num.c_[k];
                d2.c_[k - shift] = den.c_[k];
            }
            num = n2;
            den = d2;
        }
        FormalSeries out(order(), ctx_);
        const Scalar inv0 = den.c_[0].inverse();
        for (int k = 0; k < order(); ++k) {
            Scalar acc = num.c_[k];
            for (int j = 0; j < k; ++j) acc -= out.c_[j] * den.c_[k - j];
            out.c_[k] = acc * inv0;
        }
        return out;
    }
    // termwise derivative d/dx
    FormalSeries derivative() const {
        FormalSeries out(order(), ctx_);
        for (int k = 1; k < order(); ++k)
            out.c_[k - 1] = c_[k] * Scalar::from_int(k, ctx_);
        return out;
    }
    // composition g(f) where f has zero constant term
    FormalSeries compose_rule(const SeriesDef& g) const {
        if (order() > 0 && !c_[0].is_zero())
            throw ScalarError("compose needs zero constant term");
        FormalSeries out(order(), ctx_);
        FormalSeries p = constant(Scalar::from_int(1, ctx_), order(), ctx_);
        for (int k = 0; k < order(); ++k) {
            out = out + p * g.coeff(k, ctx_);
            p = p * *this;
        }
        return out;
    }
    // (this)^alpha for rational alpha; constant term must be 1
    FormalSeries pow_rational(const Rational& alpha) const {
        FormalSeries u = *this;
        if (order() == 0) return u;
        if (!(u.c_[0] == Scalar::from_int(1, ctx_)))
            throw ScalarError("pow_rational needs unit constant term");
        u.c_[0] = Scalar::from_int(0, ctx_);
        return u.compose_rule(series::binom(alpha));
    }

    // evaluate on a nilpotent matrix
    GradedMatrix eval(const GradedMatrix& x) const {
        GradedMatrix out(x.dim(), x.parity(), x.context());
        GradedMatrix p = GradedMatrix::identity(x.dim(), x.parity(), x.context());
        for (int k = 0; k < order(); ++k) {
            if (!c_[k].is_zero()) out += p * c_[k];
            p = p * x;
            if (p.is_zero()) break;
        }
        return out;
    }

  private:
    const ScalarContext* ctx_ = nullptr;
    std::vector<Scalar> c_;
};

}  // namespace qjord
