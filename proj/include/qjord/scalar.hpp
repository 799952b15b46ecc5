#pragma once

// Exact scalar tower Q < Q[h,h^-1] < Q(s)[h,h^-1] with q = s^d.
//
// A Scalar is a fraction num/den where
//   num : sparse polynomial in s (exponents >= 0), Laurent in h,
//   den : monic univariate polynomial in s,
// reduced so that gcd over Q[s] of den and the s-content of num is 1.
// This canonical form is unique; equality is coefficient-wise.
// Denominators never involve h: every h-divisor occurring in the formulas
// is a monomial, which folds into the Laurent numerator.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace qjord {

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HalfPowerUnrepresentable : ScalarError {
    using ScalarError::ScalarError;
};
struct PoleAtOne : ScalarError {
    using ScalarError::ScalarError;
};
struct InexactDivision : ScalarError {
    using ScalarError::ScalarError;
};

// q = s^root_degree; h formal by default, optionally specialized to a rational.
struct ScalarContext {
    int root_degree = 6;
    std::optional<Rational> h_value;
};

namespace detail {

// univariate polynomial in s over Q, exponent -> coefficient (no zeros stored)
using SPoly = std::map<int, Rational>;

inline void sp_trim(SPoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second == 0) it = p.erase(it); else ++it;
    }
}
inline int sp_deg(const SPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }
inline SPoly sp_one() { return SPoly{{0, Rational(1)}}; }
inline bool sp_is_one(const SPoly& p) {
    return p.size() == 1 && p.begin()->first == 0 && p.begin()->second == 1;
}
inline SPoly sp_mul(const SPoly& a, const SPoly& b) {
    SPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    sp_trim(out);
    return out;
}
inline SPoly sp_scale(const SPoly& a, const Rational& c) {
    SPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : a) out[e] = v * c;
    return out;
}
inline SPoly sp_add(const SPoly& a, const SPoly& b) {
    SPoly out = a;
    for (const auto& [e, v] : b) {
        out[e] += v;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}
// division with remainder; exact division helpers
inline void sp_divmod(const SPoly& a, const SPoly& b, SPoly& q, SPoly& r) {
    if (b.empty()) throw ScalarError("division by zero polynomial");
    q.clear();
    r = a;
    const int db = sp_deg(b);
    const Rational lb = b.rbegin()->second;
    while (!r.empty() && sp_deg(r) >= db) {
        const int dr = sp_deg(r);
        const Rational c = r.rbegin()->second / lb;
        q[dr - db] += c;
        for (const auto& [e, v] : b) {
            r[e + dr - db] -= c * v;
            if (r[e + dr - db] == 0) r.erase(e + dr - db);
        }
    }
}
inline SPoly sp_gcd(SPoly a, SPoly b) {
    while (!b.empty()) {
        SPoly q, r;
        sp_divmod(a, b, q, r);
        a.swap(b);
        b.swap(r);
    }
    if (a.empty()) return a;
    const Rational lc = a.rbegin()->second;  // make monic
    for (auto& [e, v] : a) v /= lc;
    return a;
}
inline Rational sp_eval1(const SPoly& p) {  // p(1)
    Rational out(0);
    for (const auto& [e, v] : p) out += v;
    return out;
}

struct Key {
    int s;  // >= 0
    int h;  // any integer (Laurent)
    bool operator<(const Key& o) const {
        if (h != o.h) return h < o.h;
        return s < o.s;
    }
    bool operator==(const Key& o) const { return s == o.s && h == o.h; }
};

// bivariate numerator: Key{s,h} -> coefficient
using NPoly = std::map<Key, Rational>;

inline void np_trim(NPoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second == 0) it = p.erase(it); else ++it;
    }
}
inline NPoly np_mul(const NPoly& a, const NPoly& b) {
    NPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[Key{ka.s + kb.s, ka.h + kb.h}] += ca * cb;
    np_trim(out);
    return out;
}
inline NPoly np_mul_sp(const NPoly& a, const SPoly& b) {
    NPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [eb, cb] : b) out[Key{ka.s + eb, ka.h}] += ca * cb;
    np_trim(out);
    return out;
}
inline NPoly np_add(const NPoly& a, const NPoly& b) {
    NPoly out = a;
    for (const auto& [k, v] : b) {
        out[k] += v;
        if (out[k] == 0) out.erase(k);
    }
    return out;
}
// s-content: gcd over Q[s] of the h-slices
inline SPoly np_s_content(const NPoly& p) {
    std::map<int, SPoly> slices;
    for (const auto& [k, v] : p) slices[k.h][k.s] = v;
    SPoly g;
    for (auto& [hh, sl] : slices) {
        g = g.empty() ? [&] { SPoly m = sl; const Rational lc = m.rbegin()->second;
                              for (auto& [e, v] : m) v /= lc; return m; }()
                      : sp_gcd(g, sl);
        if (sp_is_one(g)) break;
    }
    return g;
}
// exact division of every h-slice by a monic s-polynomial
inline NPoly np_div_sp(const NPoly& p, const SPoly& d) {
    if (sp_is_one(d)) return p;
    std::map<int, SPoly> slices;
    for (const auto& [k, v] : p) slices[k.h][k.s] = v;
    NPoly out;
    for (auto& [hh, sl] : slices) {
        SPoly q, r;
        sp_divmod(sl, d, q, r);
        if (!r.empty()) throw ScalarError("inexact polynomial division");
        for (const auto& [e, v] : q) out[Key{e, hh}] = v;
    }
    np_trim(out);
    return out;
}

}  // namespace detail

class Scalar {
  public:
    Scalar() : ctx_(nullptr) {}

    static Scalar from_rational(const Rational& r, const ScalarContext* ctx) {
        Scalar x(ctx);
        if (r != 0) x.num_[detail::Key{0, 0}] = r;
        return x;
    }
    static Scalar from_int(long n, const ScalarContext* ctx) {
        return from_rational(Rational(n), ctx);
    }
    // the formal parameter h (or its specialized value)
    static Scalar h(const ScalarContext* ctx, int power = 1) {
        Scalar x(ctx);
        if (ctx->h_value) {
            Rational v(1);
            const Rational& hv = *ctx->h_value;
            if (power >= 0) for (int i = 0; i < power; ++i) v *= hv;
            else {
                if (hv == 0) throw ScalarError("h specialized to 0, negative power");
                for (int i = 0; i < -power; ++i) v /= hv;
            }
            return from_rational(v, ctx);
        }
        x.num_[detail::Key{0, power}] = 1;
        return x;
    }
    // s^k (k may be negative: folds into the denominator)
    static Scalar s_power(int k, const ScalarContext* ctx) {
        Scalar x(ctx);
        if (k >= 0) {
            x.num_[detail::Key{k, 0}] = 1;
        } else {
            x.num_[detail::Key{0, 0}] = 1;
            x.den_ = detail::SPoly{{-k, Rational(1)}};
        }
        return x;
    }
    // q^e for rational e; requires root_degree * e integral
    static Scalar q_power(const Rational& e, const ScalarContext* ctx) {
        Rational ex = e * ctx->root_degree;
        if (!is_integer(ex))
            throw HalfPowerUnrepresentable("q^" + rat_str(e) + " is not polynomial in s for d=" +
                                           std::to_string(ctx->root_degree));
        return s_power(static_cast<int>(ex.get_num().get_si()), ctx);
    }

    const ScalarContext* context() const { return ctx_; }
    bool is_zero() const { return num_.empty(); }
    bool is_s_free() const {
        if (!detail::sp_is_one(den_) && !num_.empty()) return false;
        if (num_.empty()) return true;
        for (const auto& [k, v] : num_)
            if (k.s != 0) return false;
        return detail::sp_is_one(den_);
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar out = *this;
        for (auto& [k, v] : out.num_) v = -v;
        return out;
    }
    Scalar operator+(const Scalar& o) const {
        const ScalarContext* c = merge_ctx(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        Scalar out(c);
        const detail::SPoly g = detail::sp_gcd(den_, o.den_);
        detail::SPoly q1, q2, r;
        detail::sp_divmod(o.den_, g, q2, r);
        detail::sp_divmod(den_, g, q1, r);
        out.num_ = detail::np_add(detail::np_mul_sp(num_, q2), detail::np_mul_sp(o.num_, q1));
        out.den_ = detail::sp_mul(den_, q2);
        out.normalize();
        return out;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        const ScalarContext* c = merge_ctx(o);
        Scalar out(c);
        if (is_zero() || o.is_zero()) return out;
        out.num_ = detail::np_mul(num_, o.num_);
        out.den_ = detail::sp_mul(den_, o.den_);
        out.normalize();
        return out;
    }
    // full field division; the divisor's numerator must live in a single
    // h-degree (all denominators arising in the formulas do)
    Scalar operator/(const Scalar& o) const {
        return *this * o.inverse();
    }
    Scalar inverse() const {
        if (is_zero()) throw ScalarError("division by zero scalar");
        const int hdeg = num_.begin()->first.h;
        for (const auto& [k, v] : num_)
            if (k.h != hdeg)
                throw InexactDivision("divisor mixes h-degrees; not invertible in Q(s)[h,h^-1]");
        Scalar out(ctx_);
        detail::SPoly numpoly;
        for (const auto& [k, v] : num_) numpoly[k.s] = v;
        for (const auto& [e, v] : den_) out.num_[detail::Key{e, -hdeg}] = v;
        out.den_ = numpoly;
        out.normalize();
        return out;
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar out = from_rational(1, ctx_ ? ctx_ : nullptr);
        Scalar base = *this;
        while (k > 0) {
            if (k & 1) out = out * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return out;
    }

    // the q -> 1 limit: cancel (s-1) factors, then substitute s = 1.
    // PoleAtOne if the pole does not cancel.
    Scalar limit_q1() const {
        if (is_zero()) return Scalar(ctx_);
        detail::SPoly den = den_;
        detail::NPoly num = num_;
        const detail::SPoly s_minus_1{{1, Rational(1)}, {0, Rational(-1)}};
        while (detail::sp_eval1(den) == 0) {
            detail::SPoly q, r;
            detail::sp_divmod(den, s_minus_1, q, r);
            den = q;  // remainder is zero because den(1) == 0
            try {
                num = detail::np_div_sp(num, s_minus_1);
            } catch (const ScalarError&) {
                throw PoleAtOne("pole at q=1 does not cancel");
            }
        }
        const Rational dv = detail::sp_eval1(den);
        std::map<int, Rational> hslices;
        for (const auto& [k, v] : num) hslices[k.h] += v;
        Scalar out(ctx_);
        for (const auto& [hh, v] : hslices) {
            const Rational c = v / dv;
            if (c != 0) out.num_[detail::Key{0, hh}] = c;
        }
        return out;
    }

    // drop numerator terms with h-degree above k (s-free scalars only)
    Scalar truncate_h(int k) const {
        Scalar out(ctx_);
        out.den_ = den_;
        for (const auto& [key, v] : num_)
            if (key.h <= k) out.num_[key] = v;
        out.normalize();
        return out;
    }

    // canonical string: terms sorted by (h-degree desc, s-degree desc)
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        os << num_string();
        if (!detail::sp_is_one(den_)) os << "/(" << spoly_string(den_) << ")";
        return os.str();
    }

    // access for exports/tests
    Rational coeff(int s_exp, int h_exp) const {
        auto it = num_.find(detail::Key{s_exp, h_exp});
        if (it == num_.end()) return Rational(0);
        return it->second;
    }
    bool den_is_one() const { return detail::sp_is_one(den_) || num_.empty(); }
    // rational value of an s-free, h-free scalar
    Rational rational_value() const {
        if (is_zero()) return Rational(0);
        if (num_.size() != 1 || !den_is_one()) throw ScalarError("not a constant");
        const auto& [k, v] = *num_.begin();
        if (k.s != 0 || k.h != 0) throw ScalarError("not a constant");
        return v;
    }

  private:
    explicit Scalar(const ScalarContext* ctx) : ctx_(ctx), den_(detail::sp_one()) {}

    const ScalarContext* merge_ctx(const Scalar& o) const {
        if (ctx_ && o.ctx_ && ctx_ != o.ctx_ && ctx_->root_degree != o.ctx_->root_degree)
            throw ScalarError("mixing scalar contexts with different root degrees");
        return ctx_ ? ctx_ : o.ctx_;
    }

    void normalize() {
        detail::np_trim(num_);
        if (num_.empty()) {
            den_ = detail::sp_one();
            return;
        }
        const detail::SPoly g = detail::np_s_content(num_);
        const detail::SPoly gg = detail::sp_gcd(g, den_);
        if (!detail::sp_is_one(gg)) {
            num_ = detail::np_div_sp(num_, gg);
            detail::SPoly q, r;
            detail::sp_divmod(den_, gg, q, r);
            den_ = q;
        }
        const Rational lc = den_.rbegin()->second;
        if (lc != 1) {
            for (auto& [e, v] : den_) v /= lc;
            for (auto& [k, v] : num_) v /= lc;
        }
    }

    static std::string mono_string(int s_exp, int h_exp, const Rational& c, bool lead) {
        std::ostringstream os;
        Rational a = c < 0 ? Rational(-c) : c;
        if (lead) {
            if (c < 0) os << "-";
        }
        const bool bare = (s_exp == 0 && h_exp == 0);
        if (a != 1 || bare) {
            os << rat_str(a);
            if (!bare) os << "*";
        }
        bool first = true;
        if (h_exp != 0) {
            os << "h";
            if (h_exp != 1) os << "^" << h_exp;
            first = false;
        }
        if (s_exp != 0) {
            if (!first) os << "*";
            os << "s";
            if (s_exp != 1) os << "^" << s_exp;
        }
        return os.str();
    }

    std::string num_string() const {
        // sort terms by h-degree descending, then s-degree descending
        std::vector<std::pair<detail::Key, Rational>> terms(num_.begin(), num_.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            if (a.first.h != b.first.h) return a.first.h > b.first.h;
            return a.first.s > b.first.s;
        });
        std::ostringstream os;
        bool lead = true;
        for (const auto& [k, v] : terms) {
            if (!lead) os << (v < 0 ? " - " : " + ");
            os << mono_string(k.s, k.h, lead ? v : Rational(abs(v)), lead);
            lead = false;
        }
        return os.str();
    }

    static std::string spoly_string(const detail::SPoly& p) {
        std::vector<std::pair<int, Rational>> terms(p.begin(), p.end());
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        std::ostringstream os;
        bool lead = true;
        for (const auto& [e, v] : terms) {
            if (!lead) os << (v < 0 ? " - " : " + ");
            os << mono_string(e, 0, lead ? v : Rational(abs(v)), lead);
            lead = false;
        }
        return os.str();
    }

    const ScalarContext* ctx_;
    detail::NPoly num_;
    detail::SPoly den_ = detail::sp_one();
};

// ---- q-numbers ----------------------------------------------------------

enum class QNumberKind {
    bracket,        // [x]_q = (q^x - q^-x)/(q - q^-1)
    brace,          // {x}_q = (1 - q^x)/(1 - q)
    double_bracket, // [[x]]_q = (q^x - (-1)^{2x} q^-x)/(q^{1/2} + q^{-1/2})
    bracket_fact,
    brace_fact,
    double_fact,
};

// base_exp b evaluates the kind at q^b (e.g. {n}_{q^2} has base_exp = 2).
inline Scalar qnumber(QNumberKind kind, const Rational& x, const ScalarContext* ctx,
                      int base_exp = 1) {
    const auto qp = [&](const Rational& e) { return Scalar::q_power(e * base_exp, ctx); };
    const Scalar one = Scalar::from_int(1, ctx);
    switch (kind) {
        case QNumberKind::bracket:
            return (qp(x) - qp(-x)) / (qp(1) - qp(-1));
        case QNumberKind::brace:
            return (one - qp(x)) / (one - qp(1));
        case QNumberKind::double_bracket: {
            Rational two_x = x * 2;
            if (!is_integer(two_x)) throw ScalarError("[[x]] needs 2x integral");
            const long t = to_long(two_x);
            const Scalar sgn = Scalar::from_int((t % 2 == 0) ? 1 : -1, ctx);
            return (qp(x) - sgn * qp(-x)) / (qp(rat(1, 2)) + qp(rat(-1, 2)));
        }
        case QNumberKind::bracket_fact:
        case QNumberKind::brace_fact:
        case QNumberKind::double_fact: {
            if (!is_integer(x) || x < 0) throw ScalarError("factorial needs a nonnegative integer");
            const QNumberKind base = kind == QNumberKind::bracket_fact ? QNumberKind::bracket
                                   : kind == QNumberKind::brace_fact   ? QNumberKind::brace
                                                                       : QNumberKind::double_bracket;
            Scalar out = Scalar::from_int(1, ctx);
            for (long k = 1; k <= to_long(x); ++k) out = out * qnumber(base, Rational(k), ctx, base_exp);
            return out;
        }
    }
    throw ScalarError("unknown q-number kind");
}

// {n choose m}_{q^b}; zero when m > n or m < 0
inline Scalar qbrace_binomial(long n, long m, const ScalarContext* ctx, int base_exp = 1) {
    if (m < 0 || m > n) return Scalar::from_int(0, ctx);
    Scalar num = qnumber(QNumberKind::brace_fact, Rational(n), ctx, base_exp);
    Scalar den = qnumber(QNumberKind::brace_fact, Rational(n - m), ctx, base_exp) *
                 qnumber(QNumberKind::brace_fact, Rational(m), ctx, base_exp);
    return num / den;
}

inline Scalar limit_q1(const Scalar& x) { return x.limit_q1(); }

}  // namespace qjord
