#pragma once

// JSON wire formats for graphs, mode sets, posets, distributions and results.
// Rationals travel as "num/den" strings; counts as decimal strings.

#include "modepoly/graph.hpp"
#include "modepoly/membership.hpp"
#include "modepoly/oracle.hpp"
#include "modepoly/polytope.hpp"
#include "modepoly/poset.hpp"
#include "modepoly/strong_polytope.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace modepoly::io {

using Json = nlohmann::ordered_json;

// {"nodes": [string...], "edges": [[string, string]...]}. Throws InvalidInput.
Graph parse_graph(std::string_view text);
Json graph_to_json(const Graph& g);

// {"modes": [string...]}.
ModeSet parse_mode_set(std::string_view text, const Graph& g);
Json mode_set_to_json(const Graph& g, const ModeSet& c);

// {"elements": [...], "covers": [[lower, upper]...]}.
Poset parse_poset(std::string_view text);
Json poset_to_json(const Poset& p);

// {node: "num/den", ...}; every node of g must appear exactly once.
Distribution parse_distribution(std::string_view text, const Graph& g);
Json distribution_to_json(const Graph& g, const Distribution& p);

Json rational_to_json(const Rational& q);

// "delta:x", "W:[a,b]", "anchor:x" or "oracle".
std::string generator_label(const Graph& g, const Generator& gen);

// [{"generator": ..., "probabilities": {...}}...]
Json vrep_to_json(const Graph& g, const VRep& v);
Json strong_vertices_to_json(const Graph& g, const std::vector<StrongVertex>& vertices);
// [{"kind": "positivity:x" | "mode:x>=y" | "strong:...", "facet": bool}...]
Json facets_to_json(const Graph& g, const std::vector<FacetInfo>& facets);
Json certificate_to_json(const std::vector<std::string>& labels, const ViolationCertificate& cert);
// {"member": bool, "violation": {...}?}
Json membership_to_json(const Graph& g, const MembershipResult& r);
Json decomposition_to_json(const Graph& g, const std::vector<WeightedVertex>& parts);
Json degeneracy_to_json(const Graph& g, const std::vector<ForcedConstraint>& report);
// {"instance": ..., "exact": "num/den", "estimate": float, "stderr": float, "trials": N, "seed": S}
Json montecarlo_to_json(const std::string& instance, const Rational& exact, const McEstimate& e,
                        std::uint64_t seed);

std::string read_file(const std::string& path);

} // namespace modepoly::io
