#pragma once

// Instance builders and random generators shared by the test binaries.

#include "modepoly/graph.hpp"
#include "modepoly/polytope.hpp"
#include "modepoly/poset.hpp"
#include "modepoly/rng.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace support {

using namespace modepoly;

struct Case {
    Graph graph;
    ModeSet modes;
};

// mpq_class(num, den) does not reduce; every other operation expects reduced values.
inline Rational q(long num, unsigned long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Case square_case() {
    Graph g = generate_hypercube(2);
    ModeSet c = ModeSet::from_labels(g, {"01", "10"});
    return {std::move(g), std::move(c)};
}

inline Case cube_case(unsigned n, const std::vector<std::string>& modes) {
    Graph g = generate_hypercube(n);
    ModeSet c = ModeSet::from_labels(g, modes);
    return {std::move(g), std::move(c)};
}

inline Case parity_case(unsigned n) {
    Graph g = generate_hypercube(n);
    ModeSet c = even_parity_set(g, n);
    return {std::move(g), std::move(c)};
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "v") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

// Erdos-Renyi graph with edge probability permille / 1000.
inline Graph random_graph(SplitMix64& rng, std::size_t n, unsigned permille) {
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (NodeIndex a = 0; a < n; ++a)
        for (NodeIndex b = a + 1; b < n; ++b)
            if (rng.next_below(1000) < permille) edges.emplace_back(a, b);
    return Graph::from_indices(numbered(n), edges);
}

template <typename T>
void shuffle(SplitMix64& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.next_below(i)]);
}

// Random independent set: visit nodes in random order, take each free node
// with probability 1/2. Nonempty whenever the graph is.
inline ModeSet random_independent_set(SplitMix64& rng, const Graph& g) {
    std::vector<NodeIndex> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle(rng, order);
    std::vector<bool> blocked(g.size(), false);
    NodeSet chosen;
    for (NodeIndex v : order) {
        if (blocked[v]) continue;
        if (!chosen.empty() && rng.next_below(2) == 0) continue;
        chosen.push_back(v);
        blocked[v] = true;
        for (NodeIndex y : g.neighbors(v)) blocked[y] = true;
    }
    return ModeSet(g, chosen);
}

inline Case random_case(SplitMix64& rng, std::size_t min_nodes, std::size_t max_nodes) {
    const std::size_t n = min_nodes + rng.next_below(max_nodes - min_nodes + 1);
    Graph g = random_graph(rng, n, 150 + static_cast<unsigned>(rng.next_below(500)));
    ModeSet c = random_independent_set(rng, g);
    return {std::move(g), std::move(c)};
}

// Random strict order: relations i < j drawn on a random labelling.
inline Poset random_poset(SplitMix64& rng, std::size_t n, unsigned permille) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(rng, perm);
    std::vector<Poset::Pair> relations;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next_below(1000) < permille) relations.emplace_back(perm[i], perm[j]);
    return Poset::from_indices(numbered(n, "e"), relations);
}

// Convex combination of a random nonempty subset of the vertices with small
// integer weights: an exact member of the polytope.
inline Distribution random_member(SplitMix64& rng, const VRep& v) {
    const std::size_t n = v.vertices.front().point.size();
    RationalVector sum(n);
    bool any = false;
    while (!any) {
        for (const auto& vertex : v.vertices) {
            if (rng.next_below(3) == 0) continue;
            const Rational w(static_cast<unsigned long>(1 + rng.next_below(97)));
            for (std::size_t i = 0; i < n; ++i) sum[i] += w * vertex.point[i];
            any = true;
        }
    }
    return Distribution::normalized(std::move(sum));
}

// Random rational probability vector with denominators up to ~1000.
inline Distribution random_distribution(SplitMix64& rng, std::size_t n) {
    RationalVector w(n);
    for (auto& x : w) x = static_cast<unsigned long>(rng.next_below(1000));
    w[rng.next_below(n)] += 1;
    return Distribution::normalized(std::move(w));
}

} // namespace support
