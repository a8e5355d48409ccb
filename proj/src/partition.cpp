#include "eklr/partition.hpp"

#include <algorithm>
#include <sstream>

namespace eklr {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvariantViolation("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw InvariantViolation("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& csv) {
    std::vector<long long> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) parts.push_back(std::stoll(tok));
    }
    return Partition(parts);
}

long long Partition::part(long long row) const {
    if (row < 1 || row > static_cast<long long>(parts_.size())) return 0;
    return parts_[row - 1];
}

long long Partition::size() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

Partition Partition::transpose() const {
    std::vector<long long> t;
    if (parts_.empty()) return Partition();
    t.resize(parts_[0]);
    for (long long c = 1; c <= parts_[0]; ++c) {
        long long cnt = 0;
        for (long long p : parts_)
            if (p >= c) ++cnt;
        t[c - 1] = cnt;
    }
    return Partition(t);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Multipartition Multipartition::parse(const std::string& s, int level) {
    // Components separated by '|', parts by ','.
    std::vector<Partition> comps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) comps.push_back(Partition::parse(tok));
    if (s.empty()) comps.clear();
    while (static_cast<int>(comps.size()) < level) comps.push_back(Partition());
    if (static_cast<int>(comps.size()) != level) throw MathError("multipartition has wrong level");
    return Multipartition(comps);
}

long long Multipartition::size() const {
    long long s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

bool Multipartition::box_addable(const Box& b) const {
    if (b.comp < 1 || b.comp > level()) return false;
    const Partition& p = comps_[b.comp - 1];
    if (b.row < 1 || b.row > p.length() + 1) return false;
    return b.col == p.part(b.row) + 1 && (b.row == 1 || p.part(b.row - 1) >= b.col);
}

bool Multipartition::box_removable(const Box& b) const {
    if (b.comp < 1 || b.comp > level()) return false;
    const Partition& p = comps_[b.comp - 1];
    if (b.row < 1 || b.row > p.length()) return false;
    return b.col == p.part(b.row) && p.part(b.row + 1) < b.col;
}

Multipartition Multipartition::with_added(const Box& b) const {
    if (!box_addable(b)) throw InvariantViolation("box is not addable");
    Multipartition r = *this;
    std::vector<long long> parts = r.comps_[b.comp - 1].parts();
    if (b.row > static_cast<long long>(parts.size()))
        parts.push_back(1);
    else
        parts[b.row - 1] += 1;
    r.comps_[b.comp - 1] = Partition(parts);
    return r;
}

Multipartition Multipartition::with_removed(const Box& b) const {
    if (!box_removable(b)) throw InvariantViolation("box is not removable");
    Multipartition r = *this;
    std::vector<long long> parts = r.comps_[b.comp - 1].parts();
    parts[b.row - 1] -= 1;
    r.comps_[b.comp - 1] = Partition(parts);
    return r;
}

std::vector<Box> Multipartition::addable_boxes() const {
    std::vector<Box> out;
    for (int k = 1; k <= level(); ++k) {
        const Partition& p = comps_[k - 1];
        for (long long r = 1; r <= p.length() + 1; ++r) {
            Box b{r, p.part(r) + 1, k};
            if (box_addable(b)) out.push_back(b);
        }
    }
    return out;
}

std::vector<Box> Multipartition::removable_boxes() const {
    std::vector<Box> out;
    for (int k = 1; k <= level(); ++k) {
        const Partition& p = comps_[k - 1];
        for (long long r = 1; r <= p.length(); ++r) {
            Box b{r, p.part(r), k};
            if (box_removable(b)) out.push_back(b);
        }
    }
    return out;
}

std::string Multipartition::to_string() const {
    std::string s;
    for (int k = 1; k <= level(); ++k) {
        if (k > 1) s += "|";
        s += comps_[k - 1].to_string();
    }
    return s;
}

Residue content(const Box& b, const ChargeVector& cv) {
    return cv.charge(b.comp).plus(b.col - b.row);
}

Residue step_residue(int sign, const Box& b, const ChargeVector& cv) {
    Residue c = content(b, cv);
    return sign > 0 ? c : c.plus(1);
}

Residue step_dual_residue(int sign, const Box& b, const ChargeVector& cv) {
    Residue c = content(b, cv);
    return sign > 0 ? c : c.plus(-1);
}

std::vector<Box> addable(const Multipartition& mp, const Residue& i, const ChargeVector& cv) {
    std::vector<Box> out;
    for (const Box& b : mp.addable_boxes())
        if (content(b, cv) == i) out.push_back(b);
    return out;
}

std::vector<Box> removable(const Multipartition& mp, const Residue& i, const ChargeVector& cv) {
    std::vector<Box> out;
    for (const Box& b : mp.removable_boxes())
        if (content(b, cv) == i) out.push_back(b);
    return out;
}

namespace {
void gen_partitions(long long n, long long maxpart, std::vector<long long>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> out;
    std::vector<long long> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(long long n, int level) {
    std::vector<Multipartition> out;
    std::vector<Partition> acc(level);
    // Lexicographic over (size split, component partitions), first component
    // taking the largest share first.
    struct Rec {
        static void go(long long rem, int k, int level, std::vector<Partition>& acc,
                       std::vector<Multipartition>& out) {
            if (k == level) {
                if (rem == 0) out.push_back(Multipartition(acc));
                return;
            }
            long long top = (k == level - 1) ? rem : rem;
            for (long long sz = top; sz >= 0; --sz) {
                if (k == level - 1 && sz != rem) continue;
                for (const Partition& p : enumerate_partitions(sz)) {
                    acc[k] = p;
                    go(rem - sz, k + 1, level, acc, out);
                }
                acc[k] = Partition();
            }
        }
    };
    Rec::go(n, 0, level, acc, out);
    return out;
}

}  // namespace eklr
