#include "eklr/residue.hpp"

#include <sstream>

namespace eklr {

Residue Residue::symbolic(int comp, long long offset) {
    if (comp < 1) throw MathError("symbolic residue needs component >= 1");
    Residue r;
    r.comp_ = comp;
    r.offset_ = offset;
    return r;
}

Residue Residue::concrete(const Rational& v) {
    Residue r;
    r.comp_ = 0;
    r.value_ = v;
    return r;
}

Residue Residue::parse(const std::string& s) {
    if (s.empty()) throw MathError("empty residue");
    if (s[0] == 'd') {
        size_t pos = 1;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == 1) throw MathError("bad symbolic residue: " + s);
        int comp = std::stoi(s.substr(1, pos - 1));
        long long off = 0;
        if (pos < s.size()) {
            if (s[pos] != '+' && s[pos] != '-') throw MathError("bad residue offset: " + s);
            off = std::stoll(s.substr(pos));
        }
        return symbolic(comp, off);
    }
    return concrete(rational_from_string(s));
}

Residue Residue::plus(long long n) const {
    Residue r = *this;
    if (is_symbolic())
        r.offset_ += n;
    else
        r.value_ += Rational(static_cast<long>(n));
    return r;
}

bool Residue::operator==(const Residue& o) const {
    if (comp_ != o.comp_) return false;
    return is_symbolic() ? offset_ == o.offset_ : value_ == o.value_;
}

bool Residue::operator<(const Residue& o) const {
    if (comp_ != o.comp_) return comp_ < o.comp_;
    return is_symbolic() ? offset_ < o.offset_ : value_ < o.value_;
}

std::string Residue::to_string() const {
    if (!is_symbolic()) {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_str();
    }
    std::ostringstream os;
    os << "d" << comp_;
    if (offset_ > 0) os << "+" << offset_;
    if (offset_ < 0) os << offset_;
    return os.str();
}

std::optional<long long> differ_by_int(const Residue& a, const Residue& b) {
    if (a.is_symbolic() != b.is_symbolic()) return std::nullopt;
    if (a.is_symbolic()) {
        if (a.comp() != b.comp()) return std::nullopt;
        return a.offset() - b.offset();
    }
    Rational d = a.value() - b.value();
    if (d.get_den() != 1) return std::nullopt;
    if (!d.get_num().fits_slong_p()) throw MathError("residue difference overflows");
    return d.get_num().get_si();
}

std::optional<int> differ_parity(const Residue& a, const Residue& b) {
    auto d = differ_by_int(a, b);
    if (!d) return std::nullopt;
    return static_cast<int>(((*d % 2) + 2) % 2);
}

std::optional<std::pair<int, int>> ChargeVector::validate_generic() const {
    for (size_t i = 0; i < charges.size(); ++i)
        for (size_t j = i + 1; j < charges.size(); ++j)
            if (differ_by_int(charges[i], charges[j]))
                return std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return std::nullopt;
}

std::optional<std::pair<int, long long>> ChargeVector::locate(const Residue& i) const {
    for (size_t k = 0; k < charges.size(); ++k)
        if (auto d = differ_by_int(i, charges[k])) return std::make_pair(static_cast<int>(k + 1), *d);
    return std::nullopt;
}

ChargeVector ChargeVector::standard(int level) {
    ChargeVector cv;
    for (int k = 1; k <= level; ++k) cv.charges.push_back(Residue::symbolic(k));
    return cv;
}

ChargeVector ChargeVector::parse(const std::string& csv) {
    ChargeVector cv;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) cv.charges.push_back(Residue::parse(tok));
    }
    if (cv.charges.empty()) throw MathError("empty charge vector");
    return cv;
}

std::string ChargeVector::to_string() const {
    std::string s;
    for (size_t i = 0; i < charges.size(); ++i) {
        if (i) s += ",";
        s += charges[i].to_string();
    }
    return s;
}

}  // namespace eklr
