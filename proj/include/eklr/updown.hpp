#pragma once

#include <vector>

#include "eklr/partition.hpp"

namespace eklr {

// Walk on multipartitions from the empty one, one box added or removed per
// step. Step sign +1 adds the box, -1 removes it.
class UpDownTableau {
  public:
    struct Step {
        int sign;
        Box box;
    };

    UpDownTableau() = default;
    UpDownTableau(int level, std::vector<Step> steps);

    int level() const { return level_; }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }
    // Prefix shapes t_0, ..., t_m (m+1 entries).
    const std::vector<Multipartition>& shapes() const { return shapes_; }
    const Multipartition& shape() const { return shapes_.back(); }
    UpDownTableau restricted(int n) const;

    std::vector<Residue> residue_seq(const ChargeVector& cv) const;
    std::vector<Residue> dual_residue_seq(const ChargeVector& cv) const;

    // Pairs (l, r), 1-based, matching each removal step r with the most
    // recent prior step l that added the removed box; ordered by r.
    std::vector<std::pair<int, int>> match_removals() const;

    std::string to_string() const;
    bool operator==(const UpDownTableau& o) const { return level_ == o.level_ && stepkeys() == o.stepkeys(); }
    bool operator<(const UpDownTableau& o) const { return stepkeys() < o.stepkeys(); }

  private:
    std::vector<std::tuple<int, int, long long, long long>> stepkeys() const;

    int level_ = 1;
    std::vector<Step> steps_;
    std::vector<Multipartition> shapes_;
};

// All-additions tableau of shape lambda: last component first, row by row.
UpDownTableau canonical_tableau(const Multipartition& lambda);

// All tableaux of the given length and final shape, deterministic order.
std::vector<UpDownTableau> enumerate_tableaux(int length, const Multipartition& shape);
// All tableaux of the given length and level, any shape.
std::vector<UpDownTableau> enumerate_tableaux_all(int length, int level);

// Subsequence machinery on residue sequences. An admissible permutation may
// swap adjacent entries a, b whenever a != b+1 and a != b-1 (equal entries
// may swap). A sequence "contains" a pattern when some admissible
// permutation of it has the pattern as a contiguous window.
bool admissible_subsequence_check(const std::vector<Residue>& seq, const std::vector<Residue>& pattern);
bool braid_avoiding(const std::vector<Residue>& seq);

}  // namespace eklr
