#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eklr/scalar.hpp"

using namespace eklr;

namespace {

uint64_t lcg(uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
}

Scalar random_scalar(uint64_t& s) {
    LaurentPoly num, den;
    int terms = 1 + lcg(s) % 3;
    for (int t = 0; t < terms; ++t) {
        long long e = static_cast<long long>(lcg(s) % 7) - 3;
        long long c = static_cast<long long>(lcg(s) % 9) - 4;
        num.set_coeff(e, num.coeff(e) + Rational(static_cast<long>(c)));
    }
    den.set_coeff(static_cast<long long>(lcg(s) % 3) - 1, Rational(1));
    long long c2 = static_cast<long long>(lcg(s) % 5) - 2;
    if (c2 != 0) den.set_coeff(2, Rational(static_cast<long>(c2)));
    return Scalar(num, den);
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(qint(2) == Scalar::q_power(1) + Scalar::q_power(-1));
    CHECK(qint(0) == Scalar::zero());
    CHECK(qint(1) == Scalar::one());
    CHECK(qint(-3) == -qint(3));
    // [2]*[2] = [3] + [1]
    CHECK(qint(2) * qint(2) == qint(3) + qint(1));
    for (long long m = -6; m <= 6; ++m) {
        CHECK(qint(m).bar() == qint(m));
        CHECK(qint(-m) == -qint(m));
    }
}

TEST_CASE("bar involution on scalars") {
    CHECK(Scalar::q_power(3).bar() == Scalar::q_power(-3));
    uint64_t s = 17;
    for (int t = 0; t < 50; ++t) {
        Scalar x = random_scalar(s);
        CHECK(x.bar().bar() == x);
    }
}

TEST_CASE("field arithmetic in canonical form") {
    Scalar q = Scalar::q_power(1);
    CHECK(q * Scalar::q_power(-1) == Scalar::one());
    Scalar d = q - Scalar::q_power(-1);
    CHECK(d * d.inv() == Scalar::one());
    CHECK_THROWS_AS(Scalar::zero().inv(), DivisionByZeroError);
    // canonical form is unique: equal fractions have identical storage
    Scalar a(LaurentPoly::q_power(2) - LaurentPoly(Rational(1)),
             LaurentPoly::q_power(1) - LaurentPoly(Rational(1)));
    Scalar b(LaurentPoly::q_power(1) + LaurentPoly(Rational(1)), LaurentPoly(Rational(1)));
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
}

TEST_CASE("ring axioms on randomized inputs") {
    uint64_t s = 99;
    for (int t = 0; t < 40; ++t) {
        Scalar a = random_scalar(s), b = random_scalar(s), c = random_scalar(s);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar::zero());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("equality agrees with cross multiplication") {
    uint64_t s = 7;
    for (int t = 0; t < 60; ++t) {
        Scalar a = random_scalar(s), b = random_scalar(s);
        bool cross = (a.num() * b.den()) == (b.num() * a.den());
        CHECK((a == b) == cross);
        // identical storage exactly for equal fractions
        if (cross) {
            CHECK(a.num() == b.num());
            CHECK(a.den() == b.den());
        }
    }
}

TEST_CASE("monomial detection") {
    int sign;
    long long e;
    CHECK(Scalar::q_power(-4).monomial(sign, e));
    CHECK(sign == 1);
    CHECK(e == -4);
    CHECK((-Scalar::q_power(2)).monomial(sign, e));
    CHECK(sign == -1);
    CHECK(e == 2);
    CHECK_FALSE(qint(2).monomial(sign, e));
    CHECK_FALSE(Scalar(Rational(2)).monomial(sign, e));
}

TEST_CASE("polynomial gcd normalization") {
    LaurentPoly p = qint_poly(2) * qint_poly(3);
    LaurentPoly g = poly_gcd(p, qint_poly(3));
    LaurentPoly expect = qint_poly(3).shifted(2);  // monic representative of [3]
    CHECK(g == expect);
}
