#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qjord {

// Exact arbitrary-precision rational. GMP keeps mpq_class canonical
// (reduced, positive denominator) after every operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    return static_cast<long>(r.get_num().get_si());
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// binomial(alpha, k) for rational alpha: alpha (alpha-1) ... (alpha-k+1) / k!
inline Rational rational_binomial(const Rational& alpha, int k) {
    Rational out(1);
    for (int i = 0; i < k; ++i) {
        out *= (alpha - i);
        out /= (i + 1);
    }
    return out;
}

inline Rational factorial(int n) {
    Rational out(1);
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace qjord
