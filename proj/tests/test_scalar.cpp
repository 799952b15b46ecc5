#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qjord/qjord.hpp"

using namespace qjord;

namespace {
ScalarContext ctx;  // default d = 6, formal h

Scalar S(long n) { return Scalar::from_int(n, &ctx); }
Scalar Q2(long n, long d) { return Scalar::from_rational(rat(n, d), &ctx); }
Scalar H(int p = 1) { return Scalar::h(&ctx, p); }
Scalar Qp(const Rational& e) { return Scalar::q_power(e, &ctx); }
}  // namespace

TEST_CASE("q-numbers match their defining expansions") {
    // [3]_q = q^2 + 1 + q^-2
    CHECK(qnumber(QNumberKind::bracket, 3, &ctx) == Qp(2) + S(1) + Qp(-2));
    // [0]_q! = 1
    CHECK(qnumber(QNumberKind::bracket_fact, 0, &ctx) == S(1));
    // [[1/2]]_q = 1 (numerator equals denominator)
    CHECK(qnumber(QNumberKind::double_bracket, rat(1, 2), &ctx) == S(1));
    // {n}_q = (1 - q^n)/(1 - q); {2}_q = 1 + q
    CHECK(qnumber(QNumberKind::brace, 2, &ctx) == S(1) + Qp(1));
    // base exponents: {2}_{q^2} = 1 + q^2
    CHECK(qnumber(QNumberKind::brace, 2, &ctx, 2) == S(1) + Qp(2));
    // [[x]] at half-integers: [[3/2]] = (q^{3/2} - q^{-3/2})/(q^{1/2}+q^{-1/2}) = q - 1 + q^-1
    CHECK(qnumber(QNumberKind::double_bracket, rat(3, 2), &ctx) ==
          Qp(1) - S(1) + Qp(-1));
    // {n choose m} vanishes for m > n
    CHECK(qbrace_binomial(1, 2, &ctx, 2).is_zero());
}

TEST_CASE("q powers respect the root degree") {
    CHECK(Qp(rat(1, 2)) * Qp(rat(1, 2)) == Qp(1));
    CHECK(Qp(rat(1, 3)) * Qp(rat(2, 3)) == Qp(1));
    CHECK_THROWS_AS(Scalar::q_power(rat(1, 4), &ctx), HalfPowerUnrepresentable);
    ScalarContext c2;
    c2.root_degree = 2;
    CHECK_THROWS_AS(Scalar::q_power(rat(1, 3), &c2), HalfPowerUnrepresentable);
}

TEST_CASE("limit q -> 1") {
    const Scalar q = Qp(1), one = S(1);
    CHECK(((q * q - one) / (q - one)).limit_q1() == S(2));
    CHECK(qnumber(QNumberKind::bracket, 2, &ctx).limit_q1() == S(2));
    CHECK_THROWS_AS((H() / (q - one)).limit_q1(), PoleAtOne);
    // multiplying by (q-1)/(q-1) does not change a pole-free limit
    const Scalar x = (H() + q * H(2)) / (q * q + one);
    const Scalar y = x * ((q - one) / (q - one));
    CHECK(x == y);
    CHECK(x.limit_q1() == y.limit_q1());
    // [[x]] at q=1: 0 for 2x even, 1 for 2x odd
    CHECK(qnumber(QNumberKind::double_bracket, 1, &ctx).limit_q1().is_zero());
    CHECK(qnumber(QNumberKind::double_bracket, rat(3, 2), &ctx).limit_q1() == S(1));
}

TEST_CASE("canonical form is unique: a + b - b = a bit-exactly") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3), hx(-2, 2);
    auto rnd = [&]() {
        Scalar acc = S(0);
        for (int t = 0; t < 3; ++t) {
            Scalar term = Q2(coef(rng), 1 + ex(rng));
            term = term * Qp(ex(rng)) * H(hx(rng));
            acc += term;
        }
        const Scalar den = Qp(ex(rng)) + S(1 + ex(rng));
        return acc / den;
    };
    for (int i = 0; i < 200; ++i) {
        const Scalar a = rnd(), b = rnd();
        CHECK(a + b - b == a);
        // division needs an invertible scalar: one h-degree only
        const Scalar d = (Qp(ex(rng)) + S(1 + ex(rng))) * H(hx(rng));
        CHECK((a * d) / d == a);
    }
}

TEST_CASE("canonical strings") {
    CHECK((H() - Q2(1, 2) * H(2)).to_string() == "-1/2*h^2 + h");
    CHECK(S(0).to_string() == "0");
    CHECK(S(1).to_string() == "1");
    CHECK((-H()).to_string() == "-h");
    CHECK((H(2)).to_string() == "h^2");
    CHECK((S(1) / (Qp(1) - S(1))).to_string() == "1/(s^6 - 1)");
}

TEST_CASE("h specialization") {
    ScalarContext cs;
    cs.h_value = rat(3, 7);
    CHECK(Scalar::h(&cs) == Scalar::from_rational(rat(3, 7), &cs));
    CHECK(Scalar::h(&cs, 2) == Scalar::from_rational(rat(9, 49), &cs));
    CHECK(Scalar::h(&cs, -1) == Scalar::from_rational(rat(7, 3), &cs));
}

TEST_CASE("division restricted to invertible scalars") {
    // mixing h-degrees in a divisor is not invertible in Q(s)[h,h^-1]
    CHECK_THROWS_AS(S(1) / (S(1) + H()), InexactDivision);
    // monomial-in-h divisors are fine
    CHECK((H(2) / (H() * S(2))) == Q2(1, 2) * H());
}
