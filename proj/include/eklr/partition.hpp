#pragma once

#include <string>
#include <vector>

#include "eklr/residue.hpp"

namespace eklr {

// Weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);
    static Partition parse(const std::string& csv);

    const std::vector<long long>& parts() const { return parts_; }
    long long part(long long row) const;  // 0 beyond the length
    long long size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    std::string to_string() const;

  private:
    std::vector<long long> parts_;
};

struct Box {
    long long row = 1;
    long long col = 1;
    int comp = 1;

    bool operator==(const Box& o) const { return row == o.row && col == o.col && comp == o.comp; }
    bool operator<(const Box& o) const {
        if (comp != o.comp) return comp < o.comp;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

class Multipartition {
  public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}
    static Multipartition empty_of_level(int level) { return Multipartition(std::vector<Partition>(level)); }
    static Multipartition parse(const std::string& s, int level);

    int level() const { return static_cast<int>(comps_.size()); }
    const Partition& comp(int k) const { return comps_.at(k - 1); }
    const std::vector<Partition>& comps() const { return comps_; }
    long long size() const;

    Multipartition with_added(const Box& b) const;
    Multipartition with_removed(const Box& b) const;
    bool box_addable(const Box& b) const;
    bool box_removable(const Box& b) const;

    std::vector<Box> addable_boxes() const;
    std::vector<Box> removable_boxes() const;

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator!=(const Multipartition& o) const { return !(*this == o); }
    bool operator<(const Multipartition& o) const { return comps_ < o.comps_; }
    std::string to_string() const;

  private:
    std::vector<Partition> comps_;
};

// Charged content delta_k + c - r.
Residue content(const Box& b, const ChargeVector& cv);
// Residue of a signed step: addition is the content, removal is content + 1.
Residue step_residue(int sign, const Box& b, const ChargeVector& cv);
// Dual residue: addition is the content, removal is content - 1.
Residue step_dual_residue(int sign, const Box& b, const ChargeVector& cv);

std::vector<Box> addable(const Multipartition& mp, const Residue& i, const ChargeVector& cv);
std::vector<Box> removable(const Multipartition& mp, const Residue& i, const ChargeVector& cv);

std::vector<Partition> enumerate_partitions(long long n);
std::vector<Multipartition> enumerate_multipartitions(long long n, int level);

}  // namespace eklr
