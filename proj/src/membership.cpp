#include "modepoly/membership.hpp"

#include "modepoly/mode_polytope.hpp"
#include "modepoly/strong_polytope.hpp"

namespace modepoly {

namespace {

void check_size(const Distribution& p, const Graph& g) {
    if (p.size() != g.size())
        throw DimensionMismatch("distribution has " + std::to_string(p.size()) + " entries, graph has " +
                                std::to_string(g.size()) + " nodes");
}

bool passes(const Rational& lhs, const Rational& rhs, Strictness s) {
    return s == Strictness::Weak ? lhs >= rhs : lhs > rhs;
}

MembershipResult from_hrep(const HRep& h, const Distribution& p) {
    auto violation = h.first_violation(p.values());
    return {!violation.has_value(), std::move(violation)};
}

} // namespace

NodeSet modes_of(const Distribution& p, const Graph& g, Strictness s) {
    check_size(p, g);
    NodeSet out;
    for (NodeIndex x = 0; x < g.size(); ++x) {
        bool mode = true;
        for (NodeIndex y : g.neighbors(x))
            if (!passes(p[x], p[y], s)) {
                mode = false;
                break;
            }
        if (mode) out.push_back(x);
    }
    return out;
}

NodeSet strong_modes_of(const Distribution& p, const Graph& g, Strictness s) {
    check_size(p, g);
    NodeSet out;
    for (NodeIndex x = 0; x < g.size(); ++x) {
        Rational neighborhood = 0;
        for (NodeIndex y : g.neighbors(x)) neighborhood += p[y];
        if (passes(p[x], neighborhood, s)) out.push_back(x);
    }
    return out;
}

MembershipResult in_mode_polytope(const Distribution& p, const Graph& g, const ModeSet& c) {
    check_size(p, g);
    return from_hrep(mode_hrep(g, c), p);
}

MembershipResult in_strong_polytope(const Distribution& p, const Graph& g, const ModeSet& c) {
    check_size(p, g);
    return from_hrep(strong_hrep(g, c), p);
}

} // namespace modepoly
