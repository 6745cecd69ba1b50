#pragma once

#include "modepoly/graph.hpp"
#include "modepoly/polytope.hpp"

#include <vector>

namespace modepoly {

// Polytope of distributions on which every member of c is a strong mode. It is
// a simplex with one vertex per node. Every operation requires c independent
// and throws NotIndependent otherwise.

struct StrongVertex {
    NodeIndex anchor;
    NodeSet support; // anchor together with its neighboring modes
    Distribution point;
};

// Positivity per node, then p_x >= sum_{y ~ x} p_y for each x in c.
HRep strong_hrep(const Graph& g, const ModeSet& c);

// One vertex per node, in canonical anchor order.
std::vector<StrongVertex> strong_vertices(const Graph& g, const ModeSet& c);
VRep strong_vrep(const Graph& g, const ModeSet& c);

// Classification of every inequality of strong_hrep.
std::vector<FacetInfo> classify_strong_facets(const Graph& g, const ModeSet& c);
// The |V| distinct facets: one strong-mode inequality per mode, positivity per
// non-mode. Positivity of an isolated mode is flagged as a facet by the
// classification but not repeated here.
std::vector<Inequality> strong_facets(const Graph& g, const ModeSet& c);

// Product over nodes of 1 / (|N_C(x)| + 1).
Rational strong_volume_ratio(const Graph& g, const ModeSet& c);
// |det| of the vertex matrix.
Rational strong_volume_det(const Graph& g, const ModeSet& c);

// Unique barycentric coordinates of p. Throws NotInPolytope.
std::vector<WeightedVertex> decompose_strong(const Distribution& p, const Graph& g, const ModeSet& c);

} // namespace modepoly
