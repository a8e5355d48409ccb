#include "eklr/tensor.hpp"

#include <sstream>

namespace eklr {

TensorVector TensorVector::basis(std::vector<int> pattern, std::vector<long long> indices,
                                 bool dual) {
    for (int f : pattern)
        if (f != 1 && f != 2) throw MathError("flavor pattern entries must be 1 or 2");
    if (indices.size() != pattern.size() + 1) throw MathError("index tuple length mismatch");
    TensorVector v;
    v.pattern = std::move(pattern);
    v.dual = dual;
    v.terms[indices] = Scalar::one();
    return v;
}

TensorVector TensorVector::zero_like(const TensorVector& v) {
    TensorVector z;
    z.pattern = v.pattern;
    z.dual = v.dual;
    return z;
}

void TensorVector::add_term(const std::vector<long long>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    if (pattern != o.pattern || dual != o.dual) throw MathError("tensor shape mismatch");
    TensorVector r = *this;
    for (const auto& [idx, c] : o.terms) r.add_term(idx, c);
    return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    return *this + o.scaled(-Scalar::one());
}

TensorVector TensorVector::scaled(const Scalar& c) const {
    TensorVector r = zero_like(*this);
    if (c.is_zero()) return r;
    for (const auto& [idx, s] : terms) r.terms[idx] = s * c;
    return r;
}

bool TensorVector::operator==(const TensorVector& o) const {
    return pattern == o.pattern && dual == o.dual && terms == o.terms;
}

std::string TensorVector::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*v[";
        for (size_t m = 0; m < idx.size(); ++m) {
            if (m) os << ",";
            os << idx[m];
        }
        os << "]";
    }
    return os.str();
}

std::vector<int> wedge_pattern(int d) {
    std::vector<int> p;
    for (int m = 1; m < d; ++m) p.push_back(m % 2 == 1 ? 2 : 1);
    return p;
}

long long b_coeff_int(long long d) {
    if (d == 0 || d == 1) return -2;
    long long s = d > 0 ? 1 : -1;
    bool odd = (d % 2) != 0;
    return 4 * s * (odd ? -1 : 1);
}

long long b_coeff(const Residue& i, const Residue& j) {
    auto d = differ_by_int(j, i);
    if (!d) return 0;
    return b_coeff_int(*d);
}

long long hecke_a_exp(int flavor, long long i, long long j) {
    bool io = ((i - flavor) % 2) != 0;
    bool jo = ((j - flavor) % 2) != 0;
    if (i >= j) return (io && !jo) ? 3 : -1;
    return (!io && jo) ? -3 : 1;
}

namespace {

// K functional attached to F_i on a later factor, per connective flavor.
WeightFunctional f_tail(long long i, int flavor) {
    return flavor == 1 ? WeightFunctional::beta(i) : WeightFunctional::beta(i - 1).primed();
}

// K functionals attached to E_i: on earlier factors and on later factors.
WeightFunctional e_head(long long i, int flavor) {
    return flavor == 1 ? WeightFunctional::alpha(i) : WeightFunctional::alpha(i - 1).primed();
}

WeightFunctional e_tail(long long i, int flavor) {
    WeightFunctional base1 = WeightFunctional::alpha(i) - WeightFunctional::gamma(i);
    if (flavor == 1) return base1;
    return (WeightFunctional::alpha(i - 1) - WeightFunctional::gamma(i - 1)).primed();
}

// One-site maps. Natural module: v_j F_i = d_{ij} v_{j+1}, v_j E_i =
// d_{i+1,j} v_{j-1}. Dual module: F_i v^j = d_{i+1,j} v^i, E_i v^j =
// d_{ij} v^{i+1}.
bool site_F(bool dual, long long i, long long j, long long& out) {
    if (!dual) {
        if (j != i) return false;
        out = j + 1;
        return true;
    }
    if (j != i + 1) return false;
    out = i;
    return true;
}

bool site_E(bool dual, long long i, long long j, long long& out) {
    if (!dual) {
        if (j != i + 1) return false;
        out = j - 1;
        return true;
    }
    if (j != i) return false;
    out = i + 1;
    return true;
}

}  // namespace

TensorVector apply_K(const WeightFunctional& lambda, const TensorVector& v) {
    TensorVector r = TensorVector::zero_like(v);
    for (const auto& [idx, c] : v.terms) {
        long long e = 0;
        for (long long j : idx) e += lambda.eval(j);
        r.add_term(idx, c * Scalar::q_power(e));
    }
    return r;
}

TensorVector apply_F(long long i, const TensorVector& v) {
    TensorVector r = TensorVector::zero_like(v);
    int d = v.factors();
    for (const auto& [idx, c] : v.terms) {
        for (int p = 1; p <= d; ++p) {
            long long out;
            if (!site_F(v.dual, i, idx[p - 1], out)) continue;
            long long e = 0;
            for (int m = p + 1; m <= d; ++m) e += f_tail(i, v.pattern[m - 2]).eval(idx[m - 1]);
            std::vector<long long> nidx = idx;
            nidx[p - 1] = out;
            r.add_term(nidx, c * Scalar::q_power(e));
        }
    }
    return r;
}

TensorVector apply_E(long long i, const TensorVector& v) {
    TensorVector r = TensorVector::zero_like(v);
    int d = v.factors();
    for (const auto& [idx, c] : v.terms) {
        for (int p = 1; p <= d; ++p) {
            long long out;
            if (!site_E(v.dual, i, idx[p - 1], out)) continue;
            long long e = 0;
            if (p > 1) {
                WeightFunctional head = e_head(i, v.pattern[p - 2]);
                for (int m = 1; m < p; ++m) e += head.eval(idx[m - 1]);
            }
            for (int m = p + 1; m <= d; ++m) e += e_tail(i, v.pattern[m - 2]).eval(idx[m - 1]);
            std::vector<long long> nidx = idx;
            nidx[p - 1] = out;
            r.add_term(nidx, c * Scalar::q_power(e));
        }
    }
    return r;
}

TensorVector apply_H(int k, const TensorVector& v) {
    if (k < 1 || k >= v.factors()) throw MathError("swap position out of range");
    int flavor = v.pattern[k - 1];
    TensorVector r = TensorVector::zero_like(v);
    Scalar corr = Scalar::q_power(-1) - Scalar::q_power(1);
    for (const auto& [idx, c] : v.terms) {
        long long i = idx[k - 1], j = idx[k];
        long long e = v.dual ? hecke_a_exp(flavor, j, i) : hecke_a_exp(flavor, i, j);
        std::vector<long long> sw = idx;
        std::swap(sw[k - 1], sw[k]);
        r.add_term(sw, c * Scalar::q_power(e));
        if (i < j) r.add_term(idx, c * corr);
    }
    return r;
}

TensorVector coideal_apply(long long i, int eps, const TensorVector& v) {
    if (eps != 1 && eps != -1) throw MathError("eps must be +-1");
    if (!v.dual) {
        TensorVector a = apply_F(i, v);
        TensorVector b = apply_K(-WeightFunctional::alpha(i - 1), apply_E(i - 1, v));
        return a + b.scaled(Scalar::q_power(eps - 1));
    }
    // Right action of the shifted algebra on dual vectors, realized by the
    // left action; products apply right factor first.
    TensorVector a = apply_F(i + 1, v);
    TensorVector b = apply_E(i, apply_K(-WeightFunctional::alpha(i), v));
    return (a + b.scaled(Scalar::q_power(eps - 1))).scaled(Scalar::q_power(-eps));
}

}  // namespace eklr
