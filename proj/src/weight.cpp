#include "eklr/weight.hpp"

#include <sstream>

namespace eklr {

namespace {
bool odd(long long x) { return (x % 2) != 0; }
}  // namespace

long long pair_beta(long long i, long long j) {
    if (j == i) return odd(i) ? -2 : 2;
    // Nonzero on even j above i and on odd j below i.
    bool hit = odd(j) ? (j < i) : (j > i);
    if (!hit) return 0;
    return odd(i) ? -4 : 4;
}

WeightFunctional WeightFunctional::alpha(long long i) {
    WeightFunctional f;
    f.prims_.push_back({Kind::Alpha, i, 0, 1});
    return f;
}

WeightFunctional WeightFunctional::beta(long long i) {
    WeightFunctional f;
    f.prims_.push_back({Kind::Beta, i, 0, 1});
    return f;
}

WeightFunctional WeightFunctional::gamma(long long i) { return -beta(i + 1); }

WeightFunctional WeightFunctional::eps_unit(long long i) {
    WeightFunctional f;
    f.prims_.push_back({Kind::Eps, i, 0, 1});
    return f;
}

WeightFunctional WeightFunctional::operator+(const WeightFunctional& o) const {
    WeightFunctional f = *this;
    f.prims_.insert(f.prims_.end(), o.prims_.begin(), o.prims_.end());
    return f;
}

WeightFunctional WeightFunctional::operator-() const {
    WeightFunctional f = *this;
    for (auto& p : f.prims_) p.coeff = -p.coeff;
    return f;
}

WeightFunctional WeightFunctional::primed(long long s) const {
    WeightFunctional f = *this;
    for (auto& p : f.prims_) p.shift += s;
    return f;
}

long long WeightFunctional::eval(long long j) const {
    long long v = 0;
    for (const auto& p : prims_) {
        long long jj = j - p.shift;
        switch (p.kind) {
            case Kind::Alpha:
                v += p.coeff * ((jj == p.index + 1 ? 1 : 0) - (jj == p.index ? 1 : 0));
                break;
            case Kind::Beta:
                v += p.coeff * pair_beta(p.index, jj);
                break;
            case Kind::Eps:
                v += p.coeff * (jj == p.index ? 1 : 0);
                break;
        }
    }
    return v;
}

long long WeightFunctional::pair_alpha_vee(long long j) const { return eval(j + 1) - eval(j); }

bool WeightFunctional::finite_support() const {
    // beta summands have unbounded support; anything without them is a
    // finite combination of alphas and unit functionals
    for (const auto& p : prims_)
        if (p.kind == Kind::Beta && p.coeff != 0) return false;
    return true;
}

std::string WeightFunctional::to_string() const {
    if (prims_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < prims_.size(); ++k) {
        const auto& p = prims_[k];
        if (k) os << (p.coeff >= 0 ? "+" : "");
        if (p.coeff != 1) os << p.coeff << "*";
        switch (p.kind) {
            case Kind::Alpha: os << "alpha_" << p.index; break;
            case Kind::Beta: os << "beta_" << p.index; break;
            case Kind::Eps: os << "eps_" << p.index; break;
        }
        if (p.shift) os << "'{" << p.shift << "}";
    }
    return os.str();
}

}  // namespace eklr
