#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eklr/scalar.hpp"

namespace eklr {

// Element of the charge set: either delta_k + offset for a formal symbol
// delta_k (symbolic, component k >= 1), or an explicit rational. Symbols of
// distinct components never differ by an integer.
class Residue {
  public:
    Residue() : comp_(0), offset_(0), value_(0) {}
    static Residue symbolic(int comp, long long offset = 0);
    static Residue concrete(const Rational& v);
    static Residue parse(const std::string& s);

    bool is_symbolic() const { return comp_ != 0; }
    int comp() const { return comp_; }
    long long offset() const { return offset_; }
    const Rational& value() const { return value_; }

    Residue plus(long long n) const;
    bool operator==(const Residue& o) const;
    bool operator!=(const Residue& o) const { return !(*this == o); }
    // Total order usable as a map key; within one coset it refines the
    // natural order.
    bool operator<(const Residue& o) const;

    std::string to_string() const;

  private:
    int comp_;          // 0 = concrete
    long long offset_;  // used when symbolic
    Rational value_;    // used when concrete
};

// a - b when it is an integer.
std::optional<long long> differ_by_int(const Residue& a, const Residue& b);
// Parity of a - b (0 or 1) when the difference is an integer; crossing
// degrees and swap coefficients branch on it.
std::optional<int> differ_parity(const Residue& a, const Residue& b);

struct ChargeVector {
    std::vector<Residue> charges;

    int level() const { return static_cast<int>(charges.size()); }
    const Residue& charge(int k) const { return charges.at(k - 1); }

    // Error value: the offending (1-based) pair when some difference of
    // distinct entries is an integer.
    std::optional<std::pair<int, int>> validate_generic() const;

    // Unique component whose coset contains i, with the offset i - delta_k.
    std::optional<std::pair<int, long long>> locate(const Residue& i) const;

    static ChargeVector standard(int level);  // (d1, ..., dl) symbolic
    static ChargeVector parse(const std::string& csv);
    std::string to_string() const;
};

}  // namespace eklr
