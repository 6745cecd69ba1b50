#include "modepoly/strong_polytope.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"
#include "modepoly/linalg.hpp"

#include <algorithm>

namespace modepoly {

HRep strong_hrep(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    const std::size_t n = g.size();
    HRep h{n, {}};
    for (NodeIndex x = 0; x < n; ++x) h.inequalities.push_back(Inequality::positivity(n, x));
    for (NodeIndex x : c.members()) h.inequalities.push_back(Inequality::strong_mode(g, x));
    return h;
}

std::vector<StrongVertex> strong_vertices(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    std::vector<StrongVertex> out;
    out.reserve(g.size());
    for (NodeIndex x = 0; x < g.size(); ++x) {
        NodeSet support = mode_neighbors(g, c, x);
        support.insert(std::upper_bound(support.begin(), support.end(), x), x);
        Distribution point = Distribution::uniform_on(g.size(), support);
        out.push_back({x, std::move(support), std::move(point)});
    }
    return out;
}

VRep strong_vrep(const Graph& g, const ModeSet& c) {
    VRep out;
    for (auto& v : strong_vertices(g, c))
        out.vertices.push_back({{Generator::Kind::Anchor, {v.anchor}}, std::move(v.point)});
    return out;
}

std::vector<FacetInfo> classify_strong_facets(const Graph& g, const ModeSet& c) {
    HRep h = strong_hrep(g, c);
    std::vector<FacetInfo> out;
    out.reserve(h.inequalities.size());
    for (auto& ineq : h.inequalities) {
        const NodeIndex x = ineq.x;
        if (ineq.kind == Inequality::Kind::StrongMode)
            out.push_back({std::move(ineq), true, "strong-mode inequality"});
        else if (!c.contains(x))
            out.push_back({std::move(ineq), true, "positivity of a non-mode node"});
        else if (g.isolated(x))
            out.push_back({std::move(ineq), true, "same facet as the strong-mode inequality of this isolated mode"});
        else
            out.push_back({std::move(ineq), false, "implied by the strong-mode inequality and neighbor positivity"});
    }
    return out;
}

std::vector<Inequality> strong_facets(const Graph& g, const ModeSet& c) {
    std::vector<Inequality> out;
    for (auto& info : classify_strong_facets(g, c)) {
        // An isolated mode contributes one facet, listed under its strong-mode inequality.
        const bool duplicate = info.inequality.kind == Inequality::Kind::Positivity && c.contains(info.inequality.x);
        if (info.facet && !duplicate) out.push_back(std::move(info.inequality));
    }
    return out;
}

Rational strong_volume_ratio(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    BigInt denominator = 1;
    for (NodeIndex x = 0; x < g.size(); ++x) denominator *= static_cast<unsigned long>(mode_neighbors(g, c, x).size() + 1);
    return Rational(BigInt(1), denominator);
}

Rational strong_volume_det(const Graph& g, const ModeSet& c) {
    return simplex_volume_ratio(strong_vrep(g, c).points());
}

std::vector<WeightedVertex> decompose_strong(const Distribution& p, const Graph& g, const ModeSet& c) {
    if (p.size() != g.size()) throw DimensionMismatch("distribution does not match the graph");
    HRep h = strong_hrep(g, c);
    if (auto cert = h.first_violation(p.values()))
        throw NotInPolytope(*cert, "distribution violates " + describe(g.labels(), cert->inequality));

    VRep vertices = strong_vrep(g, c);
    RationalVector weights = solve(RatMatrix::from_columns(vertices.points()), p.values());

    Rational total = 0;
    for (const auto& w : weights) {
        if (sgn(w) < 0) throw ConsistencyError("negative barycentric coordinate inside the simplex");
        total += w;
    }
    if (total != 1) throw ConsistencyError("barycentric coordinates do not sum to 1");

    std::vector<WeightedVertex> out;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (sgn(weights[i]) != 0) out.push_back({std::move(vertices.vertices[i]), std::move(weights[i])});
    return out;
}

} // namespace modepoly
