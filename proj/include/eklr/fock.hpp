#pragma once

#include <map>

#include "eklr/partition.hpp"
#include "eklr/tensor.hpp"

namespace eklr {

// Index tuple (l1+d0, l2-1+d0, ...) of a depth-d wedge; offsets are relative
// to the charge, so d0 = 0 here and the charge only labels the space.
std::vector<long long> wedge_indices(const Partition& lambda, int depth);

// Rewrite a vector with the alternating pattern (2,1,2,...) into the
// strictly decreasing wedge basis. Equal adjacent indices kill a term; an
// ascending adjacent pair (i < j) at flavor l picks up -q * a^{(l)}_{ij}
// (dual vectors use a^{(l)}_{ji}) and swaps.
std::map<std::vector<long long>, Scalar> straighten(const TensorVector& v);

struct FockVector {
    Residue delta;
    int eps = 1;
    std::map<Partition, Scalar> terms;

    static FockVector vacuum(const Residue& delta, int eps);
    static FockVector basis(const Partition& lambda, const Residue& delta, int eps);
    void add_term(const Partition& p, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FockVector& o) const;
    std::string to_string() const;
};

struct DualFockVector {
    Residue delta;
    int eps = 1;
    std::map<Partition, Scalar> terms;

    static DualFockVector vacuum(const Residue& delta, int eps);
    static DualFockVector basis(const Partition& lambda, const Residue& delta, int eps);
    void add_term(const Partition& p, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const DualFockVector& o) const;
    std::string to_string() const;
};

struct MultiFockVector {
    ChargeVector charges;
    int eps = 1;
    std::map<Multipartition, Scalar> terms;

    static MultiFockVector vacuum(const ChargeVector& cv, int eps);
    static MultiFockVector basis(const Multipartition& mp, const ChargeVector& cv, int eps);
    void add_term(const Multipartition& p, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const MultiFockVector& o) const;
    std::string to_string() const;
};

// Single fixed-depth computation of the generator action on a basis vector
// (offset n relative to the charge): coideal image, straighten, keep the
// partition-shaped results. Exposed for depth-stability checks.
std::map<Partition, Scalar> act_basis_at_depth(const Partition& lambda, long long n, int eps,
                                               int depth, bool dual);

// Generator action by truncated wedge computation: apply the generator image
// at depth d, straighten, keep partition-shaped results, and require the
// depth-(d+2) recomputation to agree. Coefficients on basis vectors must be
// single signed q-powers and the support must consist exactly of boxes of
// content i added and boxes of content i-1 removed.
FockVector act_generator(const FockVector& v, const Residue& i);
FockVector act_word(const FockVector& v, const std::vector<Residue>& word);

// Dual action: adds boxes of dual content i, removes boxes of content i+1.
DualFockVector dual_act_generator(const DualFockVector& v, const Residue& i);
DualFockVector dual_act_word(const DualFockVector& v, const std::vector<Residue>& word);

// q-antilinear involution determined by vacuum |-> dual vacuum and
// compatibility with the generator actions; computed by a triangular solve
// along canonical residue words.
DualFockVector bar_fock(const Partition& lambda, const Residue& delta, int eps);
FockVector bar_fock_inverse(const Partition& lambda, const Residue& delta, int eps);
DualFockVector bar_fock_vec(const FockVector& v);
FockVector bar_fock_inverse_vec(const DualFockVector& v);

// q-linear map with vacuum |-> dual vacuum intertwining generator i with
// generator -i. Index negation exchanges the two deformed Serre relations
// and flips the sign of the q^{eps} term, so the image lives in the dual
// Fock space of parameter -eps; the value is the transpose partition with
// a monomial coefficient.
DualFockVector tau_fock(const Partition& lambda, const Residue& delta, int eps);

Scalar pairing(const DualFockVector& w, const FockVector& v);

// Level-l action: the generator acts in the unique component whose charge
// coset contains i, identically elsewhere; zero when i lies in no coset.
MultiFockVector multi_act(const MultiFockVector& v, const Residue& i);
MultiFockVector multi_act_word(const MultiFockVector& v, const std::vector<Residue>& word);

}  // namespace eklr
