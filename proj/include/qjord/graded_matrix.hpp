#pragma once

// Dense square matrices over Scalar with a Z2 grading on the basis.
//
// Conventions (fixed across the library):
//  - graded Kronecker: (A (x) B)[(i,k),(j,l)] = (-1)^{|B| p(j)} A_ij B_kl,
//    i.e. the Koszul sign is carried by the parity of the first-factor
//    column index; first-factor-major ordering throughout;
//  - displayed operator-valued block matrices (R_q, R_h, L) materialize by
//    literal block substitution — that result coincides with the graded
//    evaluation of the corresponding universal element;
//  - graded flip P(v (x) w) = (-1)^{|v||w|} w (x) v.

#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace qjord {

enum class Parity : int { even = 0, odd = 1 };

enum class OpParity : int { even = 0, odd = 1, mixed = 2 };

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotNilpotent : MatrixError {
    using MatrixError::MatrixError;
};

class GradedMatrix {
  public:
    GradedMatrix() = default;
    GradedMatrix(int n, std::vector<int> parity, const ScalarContext* ctx)
        : n_(n), parity_(std::move(parity)), ctx_(ctx), a_(n * n) {
        assert(static_cast<int>(parity_.size()) == n_);
        for (auto& e : a_) e = Scalar::from_int(0, ctx);
    }

    static GradedMatrix identity(int n, const std::vector<int>& parity,
                                 const ScalarContext* ctx) {
        GradedMatrix m(n, parity, ctx);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::from_int(1, ctx);
        return m;
    }
    static GradedMatrix unit(int n, int i, int j, const std::vector<int>& parity,
                             const ScalarContext* ctx) {
        GradedMatrix m(n, parity, ctx);
        m.at(i, j) = Scalar::from_int(1, ctx);
        return m;
    }

    int dim() const { return n_; }
    const std::vector<int>& parity() const { return parity_; }
    const ScalarContext* context() const { return ctx_; }

    Scalar& at(int i, int j) { return a_[i * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }
    bool operator==(const GradedMatrix& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_ * n_; ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

    // operator parity from the nonzero entry pattern
    OpParity op_parity() const {
        int found = -1;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (at(i, j).is_zero()) continue;
                const int p = parity_[i] ^ parity_[j];
                if (found == -1) found = p;
                else if (found != p) return OpParity::mixed;
            }
        return found == 1 ? OpParity::odd : OpParity::even;
    }
    // homogeneous projection: keep entries with p(row) ^ p(col) == p
    GradedMatrix parity_part(int p) const {
        GradedMatrix out(n_, parity_, ctx_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((parity_[i] ^ parity_[j]) == p) out.at(i, j) = at(i, j);
        return out;
    }

    GradedMatrix operator+(const GradedMatrix& o) const {
        check_same(o);
        GradedMatrix out = *this;
        for (int i = 0; i < n_ * n_; ++i) out.a_[i] += o.a_[i];
        return out;
    }
    GradedMatrix operator-(const GradedMatrix& o) const {
        check_same(o);
        GradedMatrix out = *this;
        for (int i = 0; i < n_ * n_; ++i) out.a_[i] -= o.a_[i];
        return out;
    }
    GradedMatrix operator-() const {
        GradedMatrix out = *this;
        for (auto& e : out.a_) e = -e;
        return out;
    }
    GradedMatrix operator*(const Scalar& c) const {
        GradedMatrix out = *this;
        for (auto& e : out.a_) e *= c;
        return out;
    }
    GradedMatrix operator*(const GradedMatrix& o) const {
        check_same(o);
        GradedMatrix out(n_, parity_, ctx_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (y.is_zero()) continue;
                    out.at(i, j) += x * y;
                }
            }
        return out;
    }
    GradedMatrix& operator+=(const GradedMatrix& o) { *this = *this + o; return *this; }
    GradedMatrix& operator-=(const GradedMatrix& o) { *this = *this - o; return *this; }

    GradedMatrix pow(int k) const {
        if (k < 0) throw MatrixError("negative matrix power");
        GradedMatrix out = identity(n_, parity_, ctx_);
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    // entrywise division by a scalar; throws InexactDivision per scalar rules
    GradedMatrix divide_by(const Scalar& c) const {
        GradedMatrix out = *this;
        const Scalar inv = c.inverse();
        for (auto& e : out.a_) e *= inv;
        return out;
    }

    GradedMatrix limit_q1() const {
        GradedMatrix out(n_, parity_, ctx_);
        for (int i = 0; i < n_ * n_; ++i) out.a_[i] = a_[i].limit_q1();
        return out;
    }

    GradedMatrix truncate_h(int k) const {
        GradedMatrix out(n_, parity_, ctx_);
        for (int i = 0; i < n_ * n_; ++i) out.a_[i] = a_[i].truncate_h(k);
        return out;
    }

    // smallest k with M^k = 0, or -1 if not nilpotent up to dim
    int nilpotency_index() const {
        GradedMatrix p = *this;
        if (p.is_zero()) return 1;
        for (int k = 2; k <= n_ + 1; ++k) {
            p = p * *this;
            if (p.is_zero()) return k;
        }
        return -1;
    }

  private:
    void check_same(const GradedMatrix& o) const {
        if (n_ != o.n_) throw MatrixError("dimension mismatch");
    }

    int n_ = 0;
    std::vector<int> parity_;
    const ScalarContext* ctx_ = nullptr;
    std::vector<Scalar> a_;
};

inline std::vector<int> parity_kron(const std::vector<int>& p1, const std::vector<int>& p2) {
    std::vector<int> out;
    out.reserve(p1.size() * p2.size());
    for (int a : p1)
        for (int b : p2) out.push_back(a ^ b);
    return out;
}

namespace detail {
// graded Kronecker of homogeneous B with known operator parity
inline GradedMatrix gkron_hom(const GradedMatrix& A, const GradedMatrix& B, int pB) {
    const int n = A.dim(), m = B.dim();
    GradedMatrix out(n * m, parity_kron(A.parity(), B.parity()), A.context());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& a = A.at(i, j);
            if (a.is_zero()) continue;
            const bool neg = (pB == 1) && (A.parity()[j] == 1);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const Scalar& b = B.at(k, l);
                    if (b.is_zero()) continue;
                    out.at(i * m + k, j * m + l) = neg ? -(a * b) : a * b;
                }
        }
    return out;
}
}  // namespace detail

// graded tensor product; mixed-parity operators distribute over their
// homogeneous parts (stored implicitly as entry-pattern projections)
inline GradedMatrix graded_kron(const GradedMatrix& A, const GradedMatrix& B) {
    const OpParity pb = B.op_parity();
    if (pb != OpParity::mixed)
        return detail::gkron_hom(A, B, static_cast<int>(pb));
    return detail::gkron_hom(A, B.parity_part(0), 0) +
           detail::gkron_hom(A, B.parity_part(1), 1);
}

// ungraded Kronecker (used when materializing displayed block matrices)
inline GradedMatrix plain_kron(const GradedMatrix& A, const GradedMatrix& B) {
    return detail::gkron_hom(A, B, 0);
}

// graded flip P: V1 (x) V2 -> V2 (x) V1
inline GradedMatrix graded_flip(const std::vector<int>& p1, const std::vector<int>& p2,
                                const ScalarContext* ctx) {
    const int n = static_cast<int>(p1.size()), m = static_cast<int>(p2.size());
    GradedMatrix P(n * m, parity_kron(p2, p1), ctx);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            P.at(k * n + i, i * m + k) = Scalar::from_int((p1[i] & p2[k]) ? -1 : 1, ctx);
    return P;
}

// graded bracket [A,B] = AB - (-1)^{|A||B|} BA; anti = true forces {A,B}.
// Mixed operators distribute over homogeneous parts.
inline GradedMatrix super_bracket(const GradedMatrix& A, const GradedMatrix& B,
                                  bool anti = false) {
    const OpParity pa = A.op_parity(), pb = B.op_parity();
    if (pa == OpParity::mixed)
        return super_bracket(A.parity_part(0), B, anti) +
               super_bracket(A.parity_part(1), B, anti);
    if (pb == OpParity::mixed)
        return super_bracket(A, B.parity_part(0), anti) +
               super_bracket(A, B.parity_part(1), anti);
    const bool plus = anti || (pa == OpParity::odd && pb == OpParity::odd);
    return plus ? A * B + B * A : A * B - B * A;
}

}  // namespace qjord
