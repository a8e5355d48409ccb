#pragma once

#include <map>
#include <vector>

#include "eklr/residue.hpp"
#include "eklr/scalar.hpp"
#include "eklr/weight.hpp"

namespace eklr {

// Vector in a mixed tensor power of the natural module (or its dual when
// `dual` is set), with basis indexed by integer tuples. pattern[m-1] in
// {1,2} is the connective flavor joining factors m and m+1 under the
// left-adjusted bracketing. The natural module carries a right action, the
// dual a left action; both are expanded here factor by factor.
struct TensorVector {
    std::vector<int> pattern;
    bool dual = false;
    std::map<std::vector<long long>, Scalar> terms;

    int factors() const { return static_cast<int>(pattern.size()) + 1; }

    static TensorVector basis(std::vector<int> pattern, std::vector<long long> indices,
                              bool dual = false);
    static TensorVector zero_like(const TensorVector& v);

    void add_term(const std::vector<long long>& idx, const Scalar& c);
    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector scaled(const Scalar& c) const;
    bool operator==(const TensorVector& o) const;
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
};

// Alternating flavor pattern (2,1,2,1,...) of length d-1.
std::vector<int> wedge_pattern(int d);

// b_{ij} for an integer difference d = j - i; the residue version returns 0
// when the difference is not an integer.
long long b_coeff_int(long long d);
long long b_coeff(const Residue& i, const Residue& j);

// Exponent e with a^{(l)}_{ij} = q^e from the two-row swap table.
long long hecke_a_exp(int flavor, long long i, long long j);

TensorVector apply_K(const WeightFunctional& lambda, const TensorVector& v);
TensorVector apply_F(long long i, const TensorVector& v);
TensorVector apply_E(long long i, const TensorVector& v);
// Swap operator at positions (k, k+1), 1 <= k < factors.
TensorVector apply_H(int k, const TensorVector& v);

// Generator images F_i + q^{eps-1} E_{i-1} K_{-alpha_{i-1}} (natural module)
// and their dual counterparts q^{-eps}(F_{i+1} + q^{eps-1} E_i K_{-alpha_i})
// acting on the left.
TensorVector coideal_apply(long long i, int eps, const TensorVector& v);

}  // namespace eklr
