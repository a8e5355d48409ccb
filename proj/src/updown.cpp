#include "eklr/updown.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace eklr {

UpDownTableau::UpDownTableau(int level, std::vector<Step> steps)
    : level_(level), steps_(std::move(steps)) {
    shapes_.reserve(steps_.size() + 1);
    shapes_.push_back(Multipartition::empty_of_level(level_));
    for (const Step& s : steps_) {
        const Multipartition& prev = shapes_.back();
        shapes_.push_back(s.sign > 0 ? prev.with_added(s.box) : prev.with_removed(s.box));
    }
}

UpDownTableau UpDownTableau::restricted(int n) const {
    if (n < 0 || n > length()) throw MathError("bad restriction length");
    return UpDownTableau(level_, std::vector<Step>(steps_.begin(), steps_.begin() + n));
}

std::vector<Residue> UpDownTableau::residue_seq(const ChargeVector& cv) const {
    std::vector<Residue> out;
    out.reserve(steps_.size());
    for (const Step& s : steps_) out.push_back(step_residue(s.sign, s.box, cv));
    return out;
}

std::vector<Residue> UpDownTableau::dual_residue_seq(const ChargeVector& cv) const {
    std::vector<Residue> out;
    out.reserve(steps_.size());
    for (const Step& s : steps_) out.push_back(step_dual_residue(s.sign, s.box, cv));
    return out;
}

std::vector<std::pair<int, int>> UpDownTableau::match_removals() const {
    std::map<std::tuple<long long, long long, int>, int> last_add;
    std::vector<std::pair<int, int>> pairs;
    for (int idx = 1; idx <= length(); ++idx) {
        const Step& s = steps_[idx - 1];
        auto key = std::make_tuple(s.box.row, s.box.col, s.box.comp);
        if (s.sign > 0) {
            last_add[key] = idx;
        } else {
            auto it = last_add.find(key);
            if (it == last_add.end())
                throw InvariantViolation("removal of a box that was never added");
            pairs.emplace_back(it->second, idx);
            last_add.erase(it);
        }
    }
    return pairs;
}

std::vector<std::tuple<int, int, long long, long long>> UpDownTableau::stepkeys() const {
    std::vector<std::tuple<int, int, long long, long long>> v;
    v.reserve(steps_.size());
    for (const Step& s : steps_) v.emplace_back(s.sign, s.box.comp, s.box.row, s.box.col);
    return v;
}

std::string UpDownTableau::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < length(); ++i) {
        if (i) os << " ";
        const Step& s = steps_[i];
        os << (s.sign > 0 ? "+" : "-") << "(" << s.box.row << "," << s.box.col << "," << s.box.comp
           << ")";
    }
    return os.str();
}

UpDownTableau canonical_tableau(const Multipartition& lambda) {
    std::vector<UpDownTableau::Step> steps;
    for (int k = lambda.level(); k >= 1; --k) {
        const Partition& p = lambda.comp(k);
        for (long long r = 1; r <= p.length(); ++r)
            for (long long c = 1; c <= p.part(r); ++c) steps.push_back({+1, Box{r, c, k}});
    }
    return UpDownTableau(lambda.level(), std::move(steps));
}

namespace {
void extend(const UpDownTableau& t, int remaining, const Multipartition* target,
            std::vector<UpDownTableau>& out) {
    if (remaining == 0) {
        if (!target || t.shape() == *target) out.push_back(t);
        return;
    }
    // Prune: each step changes the size by one.
    if (target) {
        long long gap = t.shape().size() - target->size();
        if (gap < 0) gap = -gap;
        if (gap > remaining) return;
    }
    std::vector<UpDownTableau::Step> next;
    for (const Box& b : t.shape().addable_boxes()) next.push_back({+1, b});
    for (const Box& b : t.shape().removable_boxes()) next.push_back({-1, b});
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        if (a.box.comp != b.box.comp) return a.box.comp < b.box.comp;
        if (a.box.row != b.box.row) return a.box.row < b.box.row;
        return a.box.col < b.box.col;
    });
    for (const auto& s : next) {
        std::vector<UpDownTableau::Step> steps = t.steps();
        steps.push_back(s);
        extend(UpDownTableau(t.level(), std::move(steps)), remaining - 1, target, out);
    }
}
}  // namespace

std::vector<UpDownTableau> enumerate_tableaux(int length, const Multipartition& shape) {
    std::vector<UpDownTableau> out;
    extend(UpDownTableau(shape.level(), {}), length, &shape, out);
    return out;
}

std::vector<UpDownTableau> enumerate_tableaux_all(int length, int level) {
    std::vector<UpDownTableau> out;
    extend(UpDownTableau(level, {}), length, nullptr, out);
    return out;
}

namespace {
bool swappable(const Residue& a, const Residue& b) {
    auto d = differ_by_int(a, b);
    return !d || (*d != 1 && *d != -1);
}

std::set<std::vector<Residue>> admissible_closure(const std::vector<Residue>& seq) {
    std::set<std::vector<Residue>> seen{seq};
    std::vector<std::vector<Residue>> stack{seq};
    while (!stack.empty()) {
        std::vector<Residue> cur = stack.back();
        stack.pop_back();
        for (size_t p = 0; p + 1 < cur.size(); ++p) {
            if (!swappable(cur[p], cur[p + 1])) continue;
            std::vector<Residue> nxt = cur;
            std::swap(nxt[p], nxt[p + 1]);
            if (seen.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return seen;
}

bool window_match(const std::vector<Residue>& s, const std::vector<Residue>& pat) {
    if (pat.size() > s.size()) return false;
    for (size_t start = 0; start + pat.size() <= s.size(); ++start) {
        bool ok = true;
        for (size_t k = 0; k < pat.size(); ++k)
            if (!(s[start + k] == pat[k])) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}
}  // namespace

bool admissible_subsequence_check(const std::vector<Residue>& seq,
                                  const std::vector<Residue>& pattern) {
    for (const auto& s : admissible_closure(seq))
        if (window_match(s, pattern)) return true;
    return false;
}

bool braid_avoiding(const std::vector<Residue>& seq) {
    for (const auto& s : admissible_closure(seq)) {
        for (size_t p = 0; p + 2 < s.size(); ++p) {
            if (!(s[p] == s[p + 2])) continue;
            if (s[p + 1] == s[p].plus(1) || s[p + 1] == s[p].plus(-1)) return false;
        }
    }
    return true;
}

}  // namespace eklr
