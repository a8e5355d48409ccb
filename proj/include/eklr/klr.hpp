#pragma once

#include <cstdint>
#include <map>

#include "eklr/updown.hpp"

namespace eklr {

// Degrees of the diagram generators: dot 2, cap eps, cup -eps, crossing
// below. Dots die in the cyclotomic quotient, so only the other three enter
// the basis-element degrees.
struct DegreeTable {
    int eps = 1;

    int dot() const { return 2; }
    long long cap() const { return eps; }
    long long cup() const { return -eps; }
    long long crossing(const Residue& a, const Residue& b) const;
};

long long crossing_degree(const Residue& a, const Residue& b);

enum class HalfDirection { ToCanonical, FromCanonical };

// Degree of the half basis element rewriting a tableau to (or from) the
// canonical one: one cap (cup) per removal pair processed in increasing
// removal index, crossings over the still-alive strands under the arc, and
// the inversion sum of the minimal permutation onto the canonical residue
// sequence.
long long degree_half(const UpDownTableau& t, const ChargeVector& cv, int eps, HalfDirection dir);

// Same value computed with randomized arc pulling directions and a
// randomized minimal swap order; used to exercise well-definedness.
long long degree_half_randomized(const UpDownTableau& t, const ChargeVector& cv, int eps,
                                 HalfDirection dir, uint64_t& rng_state);

long long degree_psi(const UpDownTableau& t, const UpDownTableau& s, const ChargeVector& cv,
                     int eps);

// Sum of q^{degree} over basis elements with the given source residue
// sequence and target dual residue sequence.
LaurentPoly graded_hom_dim(const std::vector<Residue>& src, const std::vector<Residue>& tgt,
                           const ChargeVector& cv, int eps);

// Level-1 action coefficients on standard-module classes: each removable box
// of content i-1 and addable box of content i contributes the target
// partition together with the degree of the connecting arc diagram.
std::vector<std::pair<Partition, long long>> eklr_act(const Partition& lambda, const Residue& i,
                                                      const Residue& delta, int eps);

struct GdimIdentityReport {
    bool passed = true;
    int cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> checked;
};

// Graded-dimension identities mirroring the defining relations on classes of
// projectives, for the pair (i, j): the two deformed Serre identities (left
// and right module versions) when |i - j| = 1, the q^{b_ij} swap otherwise.
GdimIdentityReport relations_gdim_check(const Residue& i, const Residue& j, int target_bound,
                                        const ChargeVector& cv, int eps);

// Graded multiplicities of standards in the projective indexed by lambda at
// word length m; unitriangular with 1 at lambda itself when m = |lambda|.
std::map<Multipartition, LaurentPoly> projective_in_standards(const Multipartition& lambda,
                                                              const ChargeVector& cv, int eps,
                                                              int m);

}  // namespace eklr
