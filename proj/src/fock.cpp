#include "eklr/fock.hpp"

#include "eklr/updown.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace eklr {

std::vector<long long> wedge_indices(const Partition& lambda, int depth) {
    if (depth < lambda.length()) throw MathError("depth below partition length");
    std::vector<long long> idx(depth);
    for (int k = 1; k <= depth; ++k) idx[k - 1] = lambda.part(k) + 1 - k;
    return idx;
}

std::map<std::vector<long long>, Scalar> straighten(const TensorVector& v) {
    if (v.pattern != wedge_pattern(v.factors()))
        throw MathError("straightening needs the alternating flavor pattern");
    std::map<std::vector<long long>, Scalar> out;
    std::vector<std::pair<std::vector<long long>, Scalar>> work(v.terms.begin(), v.terms.end());
    while (!work.empty()) {
        auto [idx, c] = work.back();
        work.pop_back();
        bool placed = false;
        while (!placed) {
            int viol = -1;
            for (size_t p = 0; p + 1 < idx.size(); ++p)
                if (idx[p] <= idx[p + 1]) {
                    viol = static_cast<int>(p);
                    break;
                }
            if (viol < 0) {
                auto it = out.find(idx);
                if (it == out.end())
                    out.emplace(idx, c);
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) out.erase(it);
                }
                placed = true;
            } else if (idx[viol] == idx[viol + 1]) {
                placed = true;  // term dies
            } else {
                int flavor = v.pattern[viol];
                long long i = idx[viol], j = idx[viol + 1];
                long long e =
                    v.dual ? hecke_a_exp(flavor, j, i) : hecke_a_exp(flavor, i, j);
                c = c * (-Scalar::q_power(1 + e));
                std::swap(idx[viol], idx[viol + 1]);
            }
        }
    }
    return out;
}

namespace {

std::optional<Partition> partition_of_indices(const std::vector<long long>& idx) {
    int d = static_cast<int>(idx.size());
    std::vector<long long> parts;
    for (int k = 1; k <= d; ++k) {
        long long part = idx[k - 1] - 1 + k;
        if (part < 0) return std::nullopt;
        parts.push_back(part);
    }
    if (parts.back() != 0) return std::nullopt;  // touches the vacuum tail
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

// Depth-stable basis action shared by the natural and dual Fock spaces.
std::map<Partition, Scalar> act_basis_uncached(const Partition& lambda, long long n, int eps,
                                               bool dual) {
    int d = static_cast<int>(lambda.size()) + 4;
    if (n <= 0) d = std::max<long long>(d, 4 - n);
    d = std::max(d, lambda.length() + 2);
    const int cap = d + 8;
    auto cur = act_basis_at_depth(lambda, n, eps, d, dual);
    while (true) {
        auto next = act_basis_at_depth(lambda, n, eps, d + 2, dual);
        if (next == cur) break;
        d += 2;
        cur = std::move(next);
        if (d > cap)
            throw InvariantViolation("generator action did not stabilize in depth");
    }
    // Coefficients on basis vectors are single signed q-powers.
    for (const auto& [mu, c] : cur) {
        int sign;
        long long exp;
        if (!c.monomial(sign, exp))
            throw InvariantViolation("non-monomial coefficient in basis action");
        (void)mu;
    }
    return cur;
}

std::map<Partition, Scalar> act_basis(const Partition& lambda, long long n, int eps, bool dual) {
    static std::mutex mtx;
    static std::map<std::tuple<std::vector<long long>, long long, int, bool>,
                    std::map<Partition, Scalar>>
        cache;
    auto key = std::make_tuple(lambda.parts(), n, eps, dual);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto res = act_basis_uncached(lambda, n, eps, dual);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), res);
    return res;
}

}  // namespace

std::map<Partition, Scalar> act_basis_at_depth(const Partition& lambda, long long n, int eps,
                                               int depth, bool dual) {
    TensorVector tv =
        TensorVector::basis(wedge_pattern(depth), wedge_indices(lambda, depth), dual);
    TensorVector img = coideal_apply(n, eps, tv);
    std::map<Partition, Scalar> res;
    for (const auto& [idx, c] : straighten(img)) {
        auto mu = partition_of_indices(idx);
        if (!mu) continue;
        auto it = res.find(*mu);
        if (it == res.end())
            res.emplace(*mu, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) res.erase(it);
        }
    }
    return res;
}

namespace {

void check_support(const Partition& lambda, long long n, const std::map<Partition, Scalar>& got,
                   bool dual) {
    // Natural action: add content n / remove content n-1.
    // Dual action: add dual content n / remove content n+1.
    std::set<Partition> expect;
    ChargeVector cv = ChargeVector::standard(1);
    Multipartition mp({lambda});
    Residue add_res = cv.charge(1).plus(n);
    Residue rem_res = cv.charge(1).plus(dual ? n + 1 : n - 1);
    for (const Box& b : addable(mp, add_res, cv)) expect.insert(mp.with_added(b).comp(1));
    for (const Box& b : removable(mp, rem_res, cv)) expect.insert(mp.with_removed(b).comp(1));
    std::set<Partition> have;
    for (const auto& [mu, c] : got) {
        (void)c;
        have.insert(mu);
    }
    if (have != expect) throw InvariantViolation("support of generator action is off");
}

}  // namespace

FockVector FockVector::vacuum(const Residue& delta, int eps) {
    return basis(Partition(), delta, eps);
}

FockVector FockVector::basis(const Partition& lambda, const Residue& delta, int eps) {
    FockVector v;
    v.delta = delta;
    v.eps = eps;
    v.terms[lambda] = Scalar::one();
    return v;
}

void FockVector::add_term(const Partition& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

bool FockVector::operator==(const FockVector& o) const {
    return delta == o.delta && eps == o.eps && terms == o.terms;
}

std::string FockVector::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*v" << p.to_string();
    }
    return os.str();
}

DualFockVector DualFockVector::vacuum(const Residue& delta, int eps) {
    return basis(Partition(), delta, eps);
}

DualFockVector DualFockVector::basis(const Partition& lambda, const Residue& delta, int eps) {
    DualFockVector v;
    v.delta = delta;
    v.eps = eps;
    v.terms[lambda] = Scalar::one();
    return v;
}

void DualFockVector::add_term(const Partition& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

bool DualFockVector::operator==(const DualFockVector& o) const {
    return delta == o.delta && eps == o.eps && terms == o.terms;
}

std::string DualFockVector::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*v^" << p.to_string();
    }
    return os.str();
}

FockVector act_generator(const FockVector& v, const Residue& i) {
    auto n = differ_by_int(i, v.delta);
    if (!n) throw MathError("generator index must lie in the charge coset");
    FockVector out;
    out.delta = v.delta;
    out.eps = v.eps;
    for (const auto& [lambda, c] : v.terms) {
        auto res = act_basis(lambda, *n, v.eps, false);
        check_support(lambda, *n, res, false);
        for (const auto& [mu, w] : res) out.add_term(mu, c * w);
    }
    return out;
}

FockVector act_word(const FockVector& v, const std::vector<Residue>& word) {
    FockVector cur = v;
    for (const Residue& i : word) cur = act_generator(cur, i);
    return cur;
}

DualFockVector dual_act_generator(const DualFockVector& v, const Residue& i) {
    auto n = differ_by_int(i, v.delta);
    if (!n) throw MathError("generator index must lie in the charge coset");
    DualFockVector out;
    out.delta = v.delta;
    out.eps = v.eps;
    for (const auto& [lambda, c] : v.terms) {
        auto res = act_basis(lambda, *n, v.eps, true);
        check_support(lambda, *n, res, true);
        for (const auto& [mu, w] : res) out.add_term(mu, c * w);
    }
    return out;
}

DualFockVector dual_act_word(const DualFockVector& v, const std::vector<Residue>& word) {
    DualFockVector cur = v;
    for (const Residue& i : word) cur = dual_act_generator(cur, i);
    return cur;
}

namespace {

std::vector<Residue> canonical_word(const Partition& lambda, const Residue& delta) {
    ChargeVector cv;
    cv.charges.push_back(delta);
    return canonical_tableau(Multipartition({lambda})).residue_seq(cv);
}

// v_vacuum . word = c_lambda v_lambda + (strictly smaller terms).
void split_leading(const FockVector& w, const Partition& lambda, Scalar& lead,
                   std::map<Partition, Scalar>& lower) {
    lead = Scalar::zero();
    lower.clear();
    for (const auto& [mu, c] : w.terms) {
        if (mu == lambda)
            lead = c;
        else if (mu.size() < lambda.size())
            lower.emplace(mu, c);
        else
            throw InvariantViolation("canonical word produced a non-triangular term");
    }
    if (lead.is_zero()) throw InvariantViolation("canonical word has zero leading coefficient");
}

void split_leading_dual(const DualFockVector& w, const Partition& lambda, Scalar& lead,
                        std::map<Partition, Scalar>& lower) {
    lead = Scalar::zero();
    lower.clear();
    for (const auto& [mu, c] : w.terms) {
        if (mu == lambda)
            lead = c;
        else if (mu.size() < lambda.size())
            lower.emplace(mu, c);
        else
            throw InvariantViolation("canonical word produced a non-triangular term");
    }
    if (lead.is_zero()) throw InvariantViolation("canonical word has zero leading coefficient");
}

}  // namespace

DualFockVector bar_fock(const Partition& lambda, const Residue& delta, int eps) {
    if (lambda.empty()) return DualFockVector::vacuum(delta, eps);
    std::vector<Residue> word = canonical_word(lambda, delta);
    Scalar lead;
    std::map<Partition, Scalar> lower;
    split_leading(act_word(FockVector::vacuum(delta, eps), word), lambda, lead, lower);
    DualFockVector acc = dual_act_word(DualFockVector::vacuum(delta, eps), word);
    for (const auto& [mu, c] : lower) {
        DualFockVector bmu = bar_fock(mu, delta, eps);
        for (const auto& [nu, w] : bmu.terms) acc.add_term(nu, -(c.bar() * w));
    }
    Scalar scale = lead.bar().inv();
    DualFockVector out;
    out.delta = delta;
    out.eps = eps;
    for (const auto& [nu, w] : acc.terms) out.add_term(nu, scale * w);
    return out;
}

FockVector bar_fock_inverse(const Partition& lambda, const Residue& delta, int eps) {
    if (lambda.empty()) return FockVector::vacuum(delta, eps);
    std::vector<Residue> word = canonical_word(lambda, delta);
    Scalar lead;
    std::map<Partition, Scalar> lower;
    split_leading_dual(dual_act_word(DualFockVector::vacuum(delta, eps), word), lambda, lead,
                       lower);
    FockVector acc = act_word(FockVector::vacuum(delta, eps), word);
    for (const auto& [mu, c] : lower) {
        FockVector bmu = bar_fock_inverse(mu, delta, eps);
        for (const auto& [nu, w] : bmu.terms) acc.add_term(nu, -(c.bar() * w));
    }
    Scalar scale = lead.bar().inv();
    FockVector out;
    out.delta = delta;
    out.eps = eps;
    for (const auto& [nu, w] : acc.terms) out.add_term(nu, scale * w);
    return out;
}

DualFockVector bar_fock_vec(const FockVector& v) {
    DualFockVector out;
    out.delta = v.delta;
    out.eps = v.eps;
    for (const auto& [lambda, c] : v.terms) {
        DualFockVector b = bar_fock(lambda, v.delta, v.eps);
        for (const auto& [nu, w] : b.terms) out.add_term(nu, c.bar() * w);
    }
    return out;
}

FockVector bar_fock_inverse_vec(const DualFockVector& v) {
    FockVector out;
    out.delta = v.delta;
    out.eps = v.eps;
    for (const auto& [lambda, c] : v.terms) {
        FockVector b = bar_fock_inverse(lambda, v.delta, v.eps);
        for (const auto& [nu, w] : b.terms) out.add_term(nu, c.bar() * w);
    }
    return out;
}

// q-linear, with negated generator indices; index negation flips the
// deformed Serre constants, so the image lives in the dual space of the
// opposite sign parameter.
DualFockVector tau_fock(const Partition& lambda, const Residue& delta, int eps) {
    if (lambda.empty()) return DualFockVector::vacuum(delta, -eps);
    std::vector<Residue> word = canonical_word(lambda, delta);
    Scalar lead;
    std::map<Partition, Scalar> lower;
    split_leading(act_word(FockVector::vacuum(delta, eps), word), lambda, lead, lower);
    std::vector<Residue> negword;
    for (const Residue& r : word) {
        long long off = *differ_by_int(r, delta);
        negword.push_back(delta.plus(-off));
    }
    DualFockVector acc = dual_act_word(DualFockVector::vacuum(delta, -eps), negword);
    for (const auto& [mu, c] : lower) {
        DualFockVector tmu = tau_fock(mu, delta, eps);
        for (const auto& [nu, w] : tmu.terms) acc.add_term(nu, -(c * w));
    }
    Scalar scale = lead.inv();
    DualFockVector out;
    out.delta = delta;
    out.eps = -eps;
    for (const auto& [nu, w] : acc.terms) out.add_term(nu, scale * w);
    Partition expect = lambda.transpose();
    if (out.terms.size() != 1 || out.terms.begin()->first != expect)
        throw InvariantViolation("transpose map landed off the transpose partition");
    int sign;
    long long e;
    if (!out.terms.begin()->second.monomial(sign, e))
        throw InvariantViolation("transpose map coefficient is not a monomial");
    return out;
}

Scalar pairing(const DualFockVector& w, const FockVector& v) {
    if (!(w.delta == v.delta)) throw MathError("pairing needs matching charges");
    Scalar s = Scalar::zero();
    for (const auto& [p, c] : w.terms) {
        auto it = v.terms.find(p);
        if (it != v.terms.end()) s = s + c * it->second;
    }
    return s;
}

MultiFockVector MultiFockVector::vacuum(const ChargeVector& cv, int eps) {
    return basis(Multipartition::empty_of_level(cv.level()), cv, eps);
}

MultiFockVector MultiFockVector::basis(const Multipartition& mp, const ChargeVector& cv, int eps) {
    MultiFockVector v;
    v.charges = cv;
    v.eps = eps;
    v.terms[mp] = Scalar::one();
    return v;
}

void MultiFockVector::add_term(const Multipartition& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

bool MultiFockVector::operator==(const MultiFockVector& o) const {
    return charges.charges == o.charges.charges && eps == o.eps && terms == o.terms;
}

std::string MultiFockVector::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*v[" << p.to_string() << "]";
    }
    return os.str();
}

MultiFockVector multi_act(const MultiFockVector& v, const Residue& i) {
    MultiFockVector out;
    out.charges = v.charges;
    out.eps = v.eps;
    auto loc = v.charges.locate(i);
    if (!loc) return out;
    auto [k, n] = *loc;
    for (const auto& [mp, c] : v.terms) {
        auto res = act_basis(mp.comp(k), n, v.eps, false);
        for (const auto& [mu, w] : res) {
            std::vector<Partition> comps = mp.comps();
            comps[k - 1] = mu;
            out.add_term(Multipartition(comps), c * w);
        }
    }
    return out;
}

MultiFockVector multi_act_word(const MultiFockVector& v, const std::vector<Residue>& word) {
    MultiFockVector cur = v;
    for (const Residue& i : word) cur = multi_act(cur, i);
    return cur;
}

}  // namespace eklr
