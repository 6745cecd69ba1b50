#include "modepoly/poset.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace modepoly {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], i).second)
            throw InvalidInput("duplicate poset element '" + elements[i] + "'");
    std::vector<Pair> pairs;
    for (const auto& [lo, up] : relations) {
        auto a = index.find(lo);
        auto b = index.find(up);
        if (a == index.end()) throw InvalidInput("cover references unknown element '" + lo + "'");
        if (b == index.end()) throw InvalidInput("cover references unknown element '" + up + "'");
        pairs.emplace_back(a->second, b->second);
    }
    elements_ = std::move(elements);
    build(std::move(pairs));
}

Poset Poset::from_indices(std::vector<std::string> elements, std::vector<Pair> relations) {
    Poset p;
    p.elements_ = std::move(elements);
    for (std::size_t i = 0; i < p.elements_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (p.elements_[i] == p.elements_[j])
                throw InvalidInput("duplicate poset element '" + p.elements_[i] + "'");
    p.build(std::move(relations));
    return p;
}

void Poset::build(std::vector<Pair> relations) {
    const std::size_t n = elements_.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [lo, up] : relations) {
        if (lo >= n || up >= n) throw InvalidInput("cover index out of range");
        if (lo == up) throw InvalidInput("reflexive pair at '" + elements_[lo] + "'");
        succ[lo].push_back(up);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    // Kahn's algorithm: every element must be reached, otherwise there is a cycle.
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& s : succ)
        for (std::size_t v : s) ++indegree[v];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t v : succ[queue[head]])
            if (--indegree[v] == 0) queue.push_back(v);
    if (queue.size() != n) throw InvalidInput("relations contain a cycle");

    // (a, b) is a cover unless b is reachable through another successor of a.
    covers_.clear();
    below_.assign(n, {});
    above_.assign(n, {});
    std::vector<std::size_t> stamp(n, 0);
    std::size_t epoch = 0;
    std::vector<std::size_t> stack;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : succ[a]) {
            ++epoch;
            stack.clear();
            for (std::size_t c : succ[a])
                if (c != b) stack.push_back(c);
            bool redundant = false;
            while (!stack.empty() && !redundant) {
                std::size_t v = stack.back();
                stack.pop_back();
                if (stamp[v] == epoch) continue;
                stamp[v] = epoch;
                if (v == b) redundant = true;
                for (std::size_t w : succ[v]) stack.push_back(w);
            }
            if (!redundant) covers_.emplace_back(a, b);
        }
    }
    std::sort(covers_.begin(), covers_.end(), [](const Pair& l, const Pair& r) {
        return std::tie(l.second, l.first) < std::tie(r.second, r.first);
    });
    for (auto [lo, up] : covers_) {
        below_[up].push_back(lo);
        above_[lo].push_back(up);
    }
}

std::size_t Poset::index_of(const std::string& label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end()) throw InvalidInput("unknown poset element '" + label + "'");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Poset::less(std::size_t a, std::size_t b) const {
    if (a >= size() || b >= size()) throw InvalidInput("poset index out of range");
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack(above_[a].begin(), above_[a].end());
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v == b) return true;
        if (seen[v]) continue;
        seen[v] = true;
        stack.insert(stack.end(), above_[v].begin(), above_[v].end());
    }
    return false;
}

Poset Poset::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != size()) throw InvalidInput("permutation length mismatch");
    std::vector<std::string> elements(size());
    for (std::size_t i = 0; i < size(); ++i) elements.at(perm[i]) = elements_[i];
    std::vector<Pair> relations;
    for (auto [lo, up] : covers_) relations.emplace_back(perm[lo], perm[up]);
    return from_indices(std::move(elements), std::move(relations));
}

Poset poset_from_modes(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    std::vector<Poset::Pair> relations;
    for (NodeIndex x : c.members())
        for (NodeIndex y : g.neighbors(x)) relations.emplace_back(y, x);
    return Poset::from_indices(g.labels(), std::move(relations));
}

// ---------------------------------------------------------------------------
// Linear extensions
// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

struct CoverMasks {
    std::vector<Mask> above; // elements covering i
    std::vector<Mask> below; // elements covered by i
    Mask full = 0;
};

CoverMasks cover_masks(const Poset& p) {
    const std::size_t n = p.size();
    if (n > kMaxIdealElements)
        throw BudgetExceeded("ideal-lattice counting supports at most 64 elements", n);
    CoverMasks m;
    m.above.assign(n, 0);
    m.below.assign(n, 0);
    for (auto [lo, up] : p.covers()) {
        m.above[lo] |= Mask{1} << up;
        m.below[up] |= Mask{1} << lo;
    }
    m.full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    return m;
}

class TopDownCounter {
public:
    TopDownCounter(const CoverMasks& masks, std::uint64_t budget) : masks_(masks), budget_(budget) {}

    BigInt count(Mask ideal) {
        if (ideal == 0) return 1;
        if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (Mask rest = ideal; rest != 0; rest &= rest - 1) {
            int m = std::countr_zero(rest);
            if ((masks_.above[m] & ideal) == 0) total += count(ideal & ~(Mask{1} << m));
        }
        if (memo_.size() >= budget_) throw BudgetExceeded("order-ideal budget exceeded", memo_.size());
        memo_.emplace(ideal, total);
        return total;
    }

private:
    const CoverMasks& masks_;
    std::uint64_t budget_;
    std::unordered_map<Mask, BigInt> memo_;
};

} // namespace

BigInt count_linear_extensions(const Poset& p, std::uint64_t max_ideals) {
    CoverMasks masks = cover_masks(p);
    TopDownCounter counter(masks, max_ideals);
    return counter.count(masks.full);
}

BigInt count_linear_extensions_layered(const Poset& p, std::uint64_t max_ideals) {
    CoverMasks masks = cover_masks(p);
    const std::size_t n = p.size();
    std::unordered_map<Mask, BigInt> layer{{0, 1}};
    std::uint64_t stored = 1;
    for (std::size_t rank = 0; rank < n; ++rank) {
        std::unordered_map<Mask, BigInt> next;
        for (const auto& [ideal, ways] : layer) {
            for (Mask rest = masks.full & ~ideal; rest != 0; rest &= rest - 1) {
                int m = std::countr_zero(rest);
                if ((masks.below[m] & ~ideal) == 0) next[ideal | (Mask{1} << m)] += ways;
            }
        }
        stored += next.size();
        if (stored > max_ideals) throw BudgetExceeded("order-ideal budget exceeded", stored);
        layer = std::move(next);
    }
    return layer.at(masks.full);
}

bool is_linear_extension(const Poset& p, const std::vector<std::size_t>& order) {
    if (order.size() != p.size()) return false;
    std::vector<std::size_t> position(p.size(), p.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= p.size() || position[order[i]] != p.size()) return false;
        position[order[i]] = i;
    }
    return std::all_of(p.covers().begin(), p.covers().end(),
                       [&](const Poset::Pair& c) { return position[c.first] < position[c.second]; });
}

BigInt count_linear_extensions_naive(const Poset& p) {
    if (p.size() > kMaxNaiveElements)
        throw BudgetExceeded("naive extension counting supports at most 10 elements", p.size());
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    BigInt count = 0;
    do {
        if (is_linear_extension(p, order)) ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

namespace {

void extend(const Poset& p, std::vector<std::size_t>& prefix, std::vector<std::size_t>& missing_below,
            std::vector<bool>& used, std::vector<std::vector<std::size_t>>& out, std::uint64_t cap) {
    if (prefix.size() == p.size()) {
        if (out.size() >= cap) throw BudgetExceeded("linear-extension budget exceeded", out.size() + 1);
        out.push_back(prefix);
        return;
    }
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (used[v] || missing_below[v] != 0) continue;
        used[v] = true;
        prefix.push_back(v);
        for (std::size_t up : p.upper_covers(v)) --missing_below[up];
        extend(p, prefix, missing_below, used, out, cap);
        for (std::size_t up : p.upper_covers(v)) ++missing_below[up];
        prefix.pop_back();
        used[v] = false;
    }
}

} // namespace

std::vector<std::vector<std::size_t>> enumerate_extensions(const Poset& p, std::uint64_t max_extensions) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> missing_below(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) missing_below[v] = p.lower_covers(v).size();
    std::vector<bool> used(p.size(), false);
    extend(p, prefix, missing_below, used, out, max_extensions);
    return out;
}

BigInt extension_lower_bound(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    return factorial(static_cast<unsigned>(c.size())) * factorial(static_cast<unsigned>(g.size() - c.size()));
}

} // namespace modepoly
