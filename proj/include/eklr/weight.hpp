#pragma once

#include <string>
#include <vector>

namespace eklr {

// Integer-valued functional on the weight lattice basis e_j, stored as a sum
// of shifted primitives. A shift s evaluates the primitive at e_{j-s}; this
// is the conjugation matching the index-raising algebra automorphism.
class WeightFunctional {
  public:
    enum class Kind { Alpha, Beta, Eps };

    struct Prim {
        Kind kind;
        long long index;
        long long shift;
        long long coeff;
    };

    WeightFunctional() = default;

    static WeightFunctional zero() { return WeightFunctional(); }
    static WeightFunctional alpha(long long i);
    static WeightFunctional beta(long long i);
    static WeightFunctional gamma(long long i);  // -beta_{i+1}
    static WeightFunctional eps_unit(long long i);

    WeightFunctional operator+(const WeightFunctional& o) const;
    WeightFunctional operator-() const;
    WeightFunctional operator-(const WeightFunctional& o) const { return *this + (-o); }
    WeightFunctional primed(long long s = 1) const;

    long long eval(long long j) const;
    // <lambda, alpha_j^vee> = eval(j+1) - eval(j).
    long long pair_alpha_vee(long long j) const;
    bool finite_support() const;
    std::string to_string() const;

    const std::vector<Prim>& prims() const { return prims_; }

  private:
    std::vector<Prim> prims_;
};

// <beta_i, e_j>.
long long pair_beta(long long i, long long j);

}  // namespace eklr
