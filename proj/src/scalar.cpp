#include "eklr/scalar.hpp"

#include <sstream>

namespace eklr {

Rational rational_from_string(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw MathError("rationals must be given as p/q, not decimals: " + s);
    Rational r;
    if (r.set_str(s, 10) != 0) throw MathError("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_pq_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

LaurentPoly::LaurentPoly(const Rational& c) { set_coeff(0, c); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long long exp) {
    LaurentPoly p;
    p.set_coeff(exp, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(long long exp) { return monomial(Rational(1), exp); }

long long LaurentPoly::min_exp() const {
    if (is_zero()) throw MathError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
    if (is_zero()) throw MathError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long long exp, const Rational& c) {
    if (c == 0) {
        terms_.erase(exp);
    } else {
        Rational r = c;
        r.canonicalize();  // two-argument mpq constructions are not reduced
        terms_[exp] = r;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        Rational s = r.coeff(e) + c;
        r.set_coeff(e, s);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Rational s = r.coeff(e1 + e2) + c1 * c2;
            r.set_coeff(e1 + e2, s);
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem) {
    if (b.is_zero()) throw DivisionByZeroError();
    quot = LaurentPoly();
    rem = a;
    long long db = b.max_exp();
    Rational lb = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long long e = rem.max_exp() - db;
        Rational c = rem.coeff(rem.max_exp()) / lb;
        LaurentPoly t = LaurentPoly::monomial(c, e);
        quot = quot + t;
        rem = rem - t * b;
    }
}

namespace {
LaurentPoly make_monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rational lc = p.coeff(p.max_exp());
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.set_coeff(e, c / lc);
    return r;
}
}  // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (!a.is_zero()) a = a.shifted(-a.min_exp());
    if (!b.is_zero()) b = b.shifted(-b.min_exp());
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = make_monic(r);
        if (!b.is_zero()) b = b.shifted(-b.min_exp());
    }
    return make_monic(a);
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZeroError();
    canonicalize();
}

Scalar Scalar::from_poly(const LaurentPoly& p) {
    Scalar s;
    s.num_ = p;
    s.den_ = LaurentPoly(Rational(1));
    return s;
}

Scalar Scalar::q_power(long long exp) { return from_poly(LaurentPoly::q_power(exp)); }

bool Scalar::is_polynomial() const {
    return den_ == LaurentPoly(Rational(1));
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    long long na = num_.min_exp(), nb = den_.min_exp();
    LaurentPoly n0 = num_.shifted(-na), d0 = den_.shifted(-nb);
    LaurentPoly g = poly_gcd(n0, d0);
    if (!(g == LaurentPoly(Rational(1)))) {
        LaurentPoly q, r;
        poly_divmod(n0, g, q, r);
        n0 = q;
        poly_divmod(d0, g, q, r);
        d0 = q;
    }
    Rational lc = d0.coeff(d0.max_exp());
    if (lc != 1) {
        LaurentPoly scale(Rational(1) / lc);
        n0 = n0 * scale;
        d0 = d0 * scale;
    }
    num_ = n0.shifted(na - nb);
    den_ = d0;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZeroError();
    return Scalar(den_, num_);
}

Scalar Scalar::bar() const {
    if (is_zero()) return Scalar();
    return Scalar(num_.bar(), den_.bar());
}

bool Scalar::monomial(int& sign, long long& exp) const {
    if (!is_polynomial() || num_.terms().size() != 1) return false;
    const auto& [e, c] = *num_.terms().begin();
    if (c == 1) {
        sign = 1;
        exp = e;
        return true;
    }
    if (c == -1) {
        sign = -1;
        exp = e;
        return true;
    }
    return false;
}

std::string Scalar::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentPoly qint_poly(long long m) {
    if (m < 0) return -qint_poly(-m);
    LaurentPoly p;
    for (long long e = m - 1; e >= 1 - m; e -= 2) p.set_coeff(e, Rational(1));
    return p;
}

Scalar qint(long long m) { return Scalar::from_poly(qint_poly(m)); }

}  // namespace eklr
