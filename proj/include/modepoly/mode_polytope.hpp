#pragma once

#include "modepoly/graph.hpp"
#include "modepoly/polytope.hpp"
#include "modepoly/poset.hpp"

#include <cstdint>
#include <vector>

namespace modepoly {

inline constexpr std::uint64_t kDefaultMaxVertices = 1000000;

// Polytope of distributions on which every member of c is a mode. Every
// operation requires c independent and throws NotIndependent otherwise.

// Positivity per node, then p_x >= p_y for each mode x and neighbor y.
HRep mode_hrep(const Graph& g, const ModeSet& c);

// delta_x for x in c, followed by the uniform distribution on W together with
// N_C(W) for every nonempty W connected in the auxiliary graph (ordered by
// |W|, then lexicographically).
VRep mode_vertices(const Graph& g, const ModeSet& c, std::uint64_t max_vertices = kDefaultMaxVertices);

// Uniform distribution on w together with its neighboring modes.
Distribution witness_distribution(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w);

// True iff w is connected in the auxiliary graph. Throws InvalidInput when w
// is empty or meets c.
bool is_mode_vertex(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w);

// Classification of every inequality of mode_hrep.
std::vector<FacetInfo> mode_facets(const Graph& g, const ModeSet& c);

// |V| - 1, certified by the affine rank of a subsimplex of known vertices.
std::size_t mode_dimension(const Graph& g, const ModeSet& c);

// vol(polytope) / vol(simplex) = (number of linear extensions) / |V|!.
Rational mode_volume_ratio(const Graph& g, const ModeSet& c, std::uint64_t max_ideals = kDefaultMaxIdeals);

// Ascending order of the nodes along which p is nondecreasing and which is a
// linear extension of the mode poset. Equal values: poset-lower elements
// first, then canonical order. Throws NotInPolytope.
std::vector<NodeIndex> locate_simplex(const Distribution& p, const Graph& g, const ModeSet& c);
std::vector<std::size_t> locate_simplex(const Distribution& p, const Poset& order);

// Exact convex decomposition of p into vertices, by repeatedly peeling the
// witness distribution of the non-mode support. Throws NotInPolytope.
std::vector<WeightedVertex> decompose_mode(const Distribution& p, const Graph& g, const ModeSet& c);

// Poset generalization: p_x >= p_y for each cover y < x, plus positivity.
HRep mode_hrep_poset(const Poset& order);
Rational mode_volume_ratio_poset(const Poset& order, std::uint64_t max_ideals = kDefaultMaxIdeals);

} // namespace modepoly
