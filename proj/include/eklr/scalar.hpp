#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace eklr {

using Rational = mpq_class;

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : MathError {
    DivisionByZeroError() : MathError("division by zero") {}
};

struct InvariantViolation : MathError {
    using MathError::MathError;
};

Rational rational_from_string(const std::string& s);
std::string rational_to_pq_string(const Rational& r);

// Laurent polynomial in q with exact rational coefficients.
// Invariant: no zero coefficients are stored; zero is the empty map.
class LaurentPoly {
  public:
    using Terms = std::map<long long, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly monomial(const Rational& c, long long exp);
    static LaurentPoly q_power(long long exp);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    long long min_exp() const;
    long long max_exp() const;
    Rational coeff(long long exp) const;
    void set_coeff(long long exp, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by q^k.
    LaurentPoly shifted(long long k) const;
    // Substitute q -> q^{-1}.
    LaurentPoly bar() const;
    Rational eval_at_one() const;
    std::string to_string() const;

  private:
    Terms terms_;
};

// Polynomial division in Q[q]; requires min_exp >= 0 on both and b nonzero.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem);
// Monic gcd in Q[q] of the polynomial parts (inputs shifted to min_exp 0 first).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Element of Q(q) as a canonical fraction of Laurent polynomials:
// gcd(num, den) = 1 over Q[q] after clearing q-powers, den monic with
// minimal exponent 0. Equality is structural.
class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    explicit Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit Scalar(long long c) : num_(Rational(static_cast<long>(c))), den_(Rational(1)) {}
    Scalar(const LaurentPoly& num, const LaurentPoly& den);

    static Scalar from_poly(const LaurentPoly& p);
    static Scalar q_power(long long exp);
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar zero() { return Scalar(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inv() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar bar() const;
    // Returns (sign, exponent) when the value is +-q^k.
    bool monomial(int& sign, long long& exp) const;
    std::string to_string() const;

  private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

// Quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}; [-m] = -[m].
Scalar qint(long long m);
LaurentPoly qint_poly(long long m);

}  // namespace eklr
