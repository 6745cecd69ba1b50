#pragma once

#include "modepoly/degeneracy.hpp"
#include "modepoly/graph.hpp"
#include "modepoly/polytope.hpp"

#include <optional>

namespace modepoly {

enum class Strictness { Weak, Strict };

// Nodes x with p_x >= p_y (strict: >) for every neighbor y. Isolated nodes
// always qualify. Throws DimensionMismatch if p does not match g.
NodeSet modes_of(const Distribution& p, const Graph& g, Strictness s = Strictness::Weak);

// Nodes x with p_x >= sum_{y ~ x} p_y (strict: >).
NodeSet strong_modes_of(const Distribution& p, const Graph& g, Strictness s = Strictness::Weak);

struct MembershipResult {
    bool member = false;
    std::optional<ViolationCertificate> violation; // first violation, canonical order
};

MembershipResult in_mode_polytope(const Distribution& p, const Graph& g, const ModeSet& c);
MembershipResult in_strong_polytope(const Distribution& p, const Graph& g, const ModeSet& c);

} // namespace modepoly
