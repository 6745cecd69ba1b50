#include "modepoly/mode_polytope.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"
#include "modepoly/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace modepoly {

HRep mode_hrep(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    const std::size_t n = g.size();
    HRep h{n, {}};
    for (NodeIndex x = 0; x < n; ++x) h.inequalities.push_back(Inequality::positivity(n, x));
    for (NodeIndex x : c.members())
        for (NodeIndex y : g.neighbors(x)) h.inequalities.push_back(Inequality::mode(n, x, y));
    return h;
}

Distribution witness_distribution(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w) {
    NodeSet support = mode_neighbors(g, c, w);
    support.insert(support.end(), w.begin(), w.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return Distribution::uniform_on(g.size(), support);
}

namespace {

bool witness_order(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Enumerates every connected vertex set of a graph exactly once: each set is
// grown from its smallest vertex, adding only vertices larger than the root
// that are exclusive neighbors of the newest vertex.
class ConnectedSetEnumerator {
public:
    ConnectedSetEnumerator(const Graph& h, std::uint64_t budget)
        : h_(h), budget_(budget), in_sub_(h.size(), false), near_(h.size(), 0) {}

    std::vector<NodeSet> run() {
        for (NodeIndex root = 0; root < h_.size(); ++root) {
            std::vector<NodeIndex> ext;
            for (NodeIndex u : h_.neighbors(root))
                if (u > root) ext.push_back(u);
            enter(root);
            grow(root, ext);
            leave(root);
        }
        return std::move(found_);
    }

private:
    void enter(NodeIndex v) {
        in_sub_[v] = true;
        sub_.push_back(v);
        ++near_[v];
        for (NodeIndex u : h_.neighbors(v)) ++near_[u];
    }

    void leave(NodeIndex v) {
        in_sub_[v] = false;
        sub_.pop_back();
        --near_[v];
        for (NodeIndex u : h_.neighbors(v)) --near_[u];
    }

    void grow(NodeIndex root, std::vector<NodeIndex> ext) {
        if (found_.size() >= budget_) throw BudgetExceeded("vertex budget exceeded", found_.size() + 1);
        NodeSet set = sub_;
        std::sort(set.begin(), set.end());
        found_.push_back(std::move(set));
        while (!ext.empty()) {
            NodeIndex w = ext.back();
            ext.pop_back();
            std::vector<NodeIndex> next = ext;
            for (NodeIndex u : h_.neighbors(w))
                if (u > root && near_[u] == 0) next.push_back(u);
            enter(w);
            grow(root, std::move(next));
            leave(w);
        }
    }

    const Graph& h_;
    std::uint64_t budget_;
    std::vector<bool> in_sub_;
    std::vector<std::size_t> near_;
    std::vector<NodeIndex> sub_;
    std::vector<NodeSet> found_;
};

// Connected components of the auxiliary graph restricted to w (original indices).
std::vector<NodeSet> auxiliary_components(const Graph& g, const ModeSet& c, const NodeSet& w) {
    std::vector<int> component(g.size(), -1);
    std::vector<bool> in_w(g.size(), false);
    for (NodeIndex x : w) in_w[x] = true;
    std::vector<NodeSet> out;
    for (NodeIndex start : w) {
        if (component[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<NodeIndex> stack{start};
        component[start] = id;
        while (!stack.empty()) {
            NodeIndex x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            // Two steps in g through a mode stay inside the auxiliary graph.
            for (NodeIndex z : g.neighbors(x)) {
                if (!c.contains(z)) continue;
                for (NodeIndex y : g.neighbors(z))
                    if (in_w[y] && component[y] < 0) {
                        component[y] = id;
                        stack.push_back(y);
                    }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

} // namespace

VRep mode_vertices(const Graph& g, const ModeSet& c, std::uint64_t max_vertices) {
    require_independent(g, c);
    VRep out;
    for (NodeIndex x : c.members())
        out.vertices.push_back({{Generator::Kind::PointMass, {x}}, Distribution::point_mass(g.size(), x)});

    if (out.size() > max_vertices) throw BudgetExceeded("vertex budget exceeded", out.size());
    AuxiliaryGraph aux = auxiliary_graph(g, c);
    ConnectedSetEnumerator enumerator(aux.graph, max_vertices - out.size());
    std::vector<NodeSet> witnesses = enumerator.run();
    for (auto& w : witnesses)
        for (auto& v : w) v = aux.original[v];
    std::sort(witnesses.begin(), witnesses.end(), witness_order);

    for (auto& w : witnesses) {
        Distribution point = witness_distribution(g, c, w);
        out.vertices.push_back({{Generator::Kind::Witness, std::move(w)}, std::move(point)});
    }
    return out;
}

bool is_mode_vertex(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w) {
    require_independent(g, c);
    if (w.empty()) throw InvalidInput("witness set is empty");
    NodeSet set(w.begin(), w.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (NodeIndex x : set) {
        if (x >= g.size()) throw InvalidInput("witness node out of range");
        if (c.contains(x)) throw InvalidInput("witness set meets the mode set at '" + g.label(x) + "'");
    }
    return auxiliary_components(g, c, set).size() == 1;
}

std::vector<FacetInfo> mode_facets(const Graph& g, const ModeSet& c) {
    HRep h = mode_hrep(g, c);
    std::vector<FacetInfo> out;
    out.reserve(h.inequalities.size());
    for (auto& ineq : h.inequalities) {
        if (ineq.kind == Inequality::Kind::Mode) {
            out.push_back({std::move(ineq), true, "mode inequality"});
            continue;
        }
        const NodeIndex x = ineq.x;
        if (!c.contains(x))
            out.push_back({std::move(ineq), true, "positivity of a non-mode node"});
        else if (g.isolated(x))
            out.push_back({std::move(ineq), true, "positivity of an isolated mode"});
        else
            out.push_back({std::move(ineq), false,
                           "implied by p_" + g.label(x) + " >= p_" + g.label(g.neighbors(x).front()) +
                               " and p_" + g.label(g.neighbors(x).front()) + " >= 0"});
    }
    return out;
}

std::size_t mode_dimension(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    std::vector<RationalVector> witness;
    for (NodeIndex x = 0; x < g.size(); ++x) {
        if (c.contains(x))
            witness.push_back(Distribution::point_mass(g.size(), x).values());
        else {
            const NodeIndex one[] = {x};
            witness.push_back(witness_distribution(g, c, one).values());
        }
    }
    const std::size_t dim = affine_rank(witness);
    if (dim + 1 != g.size())
        throw ConsistencyError("witness subsimplex has affine rank " + std::to_string(dim));
    return dim;
}

Rational mode_volume_ratio(const Graph& g, const ModeSet& c, std::uint64_t max_ideals) {
    return mode_volume_ratio_poset(poset_from_modes(g, c), max_ideals);
}

HRep mode_hrep_poset(const Poset& order) {
    const std::size_t n = order.size();
    HRep h{n, {}};
    for (std::size_t x = 0; x < n; ++x) h.inequalities.push_back(Inequality::positivity(n, x));
    for (auto [lower, upper] : order.covers()) h.inequalities.push_back(Inequality::mode(n, upper, lower));
    return h;
}

Rational mode_volume_ratio_poset(const Poset& order, std::uint64_t max_ideals) {
    Rational ratio(count_linear_extensions(order, max_ideals), factorial(static_cast<unsigned>(order.size())));
    ratio.canonicalize();
    return ratio;
}

std::vector<std::size_t> locate_simplex(const Distribution& p, const Poset& order) {
    HRep h = mode_hrep_poset(order);
    if (auto cert = h.first_violation(p.values()))
        throw NotInPolytope(*cert, "distribution violates " + describe(order.elements(), cert->inequality));

    const std::size_t n = order.size();
    std::vector<std::size_t> by_value(n);
    std::iota(by_value.begin(), by_value.end(), 0);
    std::stable_sort(by_value.begin(), by_value.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });

    // Within a block of equal values, emit a topological order of the block,
    // preferring the smallest index among the available elements.
    std::vector<std::size_t> result;
    result.reserve(n);
    std::vector<std::size_t> block_of(n, n);
    for (std::size_t begin = 0; begin < n;) {
        std::size_t end = begin;
        while (end < n && p[by_value[end]] == p[by_value[begin]]) ++end;
        for (std::size_t i = begin; i < end; ++i) block_of[by_value[i]] = begin;

        std::vector<std::size_t> pending(n, 0);
        std::vector<std::size_t> ready;
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t v = by_value[i];
            for (std::size_t lo : order.lower_covers(v))
                if (block_of[lo] == begin && p[lo] == p[v]) ++pending[v];
            if (pending[v] == 0) ready.push_back(v);
        }
        while (!ready.empty()) {
            auto it = std::min_element(ready.begin(), ready.end());
            std::size_t v = *it;
            ready.erase(it);
            result.push_back(v);
            for (std::size_t up : order.upper_covers(v))
                if (block_of[up] == begin && p[up] == p[v] && --pending[up] == 0) ready.push_back(up);
        }
        begin = end;
    }
    if (result.size() != n || !is_linear_extension(order, result))
        throw ConsistencyError("located ordering is not a linear extension");
    return result;
}

std::vector<NodeIndex> locate_simplex(const Distribution& p, const Graph& g, const ModeSet& c) {
    if (p.size() != g.size()) throw DimensionMismatch("distribution does not match the graph");
    HRep h = mode_hrep(g, c);
    if (auto cert = h.first_violation(p.values()))
        throw NotInPolytope(*cert, "distribution violates " + describe(g.labels(), cert->inequality));
    return locate_simplex(p, poset_from_modes(g, c));
}

std::vector<WeightedVertex> decompose_mode(const Distribution& p, const Graph& g, const ModeSet& c) {
    if (p.size() != g.size()) throw DimensionMismatch("distribution does not match the graph");
    HRep h = mode_hrep(g, c);
    if (auto cert = h.first_violation(p.values()))
        throw NotInPolytope(*cert, "distribution violates " + describe(g.labels(), cert->inequality));

    RationalVector rest = p.values();
    std::map<NodeSet, Rational> witness_weights;
    std::map<NodeIndex, Rational> point_weights;

    // Peel the witness distribution of the non-mode support with the largest
    // multiple that keeps the remainder nonnegative; each round zeroes at least
    // one non-mode coordinate.
    for (;;) {
        NodeSet w;
        for (NodeIndex x = 0; x < g.size(); ++x)
            if (!c.contains(x) && sgn(rest[x]) > 0) w.push_back(x);
        if (w.empty()) break;

        Rational level = rest[w.front()];
        for (NodeIndex x : w) level = std::min(level, rest[x]);

        for (const NodeSet& part : auxiliary_components(g, c, w)) {
            NodeSet support = mode_neighbors(g, c, part);
            support.insert(support.end(), part.begin(), part.end());
            for (NodeIndex x : support) rest[x] -= level;
            witness_weights[part] += level * static_cast<unsigned long>(support.size());
        }
    }
    for (NodeIndex x : c.members())
        if (sgn(rest[x]) > 0) point_weights[x] += rest[x];
        else if (sgn(rest[x]) < 0)
            throw ConsistencyError("negative remainder at mode '" + g.label(x) + "'");

    std::vector<WeightedVertex> out;
    for (auto& [x, weight] : point_weights)
        out.push_back({{{Generator::Kind::PointMass, {x}}, Distribution::point_mass(g.size(), x)}, weight});
    std::vector<NodeSet> order;
    for (const auto& [w, weight] : witness_weights) order.push_back(w);
    std::sort(order.begin(), order.end(), witness_order);
    for (auto& w : order) {
        Distribution point = witness_distribution(g, c, w);
        Rational weight = witness_weights.at(w);
        out.push_back({{{Generator::Kind::Witness, std::move(w)}, std::move(point)}, std::move(weight)});
    }
    return out;
}

} // namespace modepoly
