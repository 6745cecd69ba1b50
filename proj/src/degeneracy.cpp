#include "modepoly/degeneracy.hpp"

#include <algorithm>
#include <set>

namespace modepoly {

std::vector<ForcedConstraint> degeneracy_report(const Graph& g, const ModeSet& c) {
    using Kind = ForcedConstraint::Kind;
    using Context = ForcedConstraint::Context;

    std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
    for (NodeIndex x : c.members())
        for (NodeIndex y : g.neighbors(x))
            if (x < y && c.contains(y)) pairs.emplace_back(x, y);

    std::vector<ForcedConstraint> out;
    for (auto [x, y] : pairs) out.push_back({Kind::Equal, Context::Mode, x, y});
    for (auto [x, y] : pairs) out.push_back({Kind::Equal, Context::Strong, x, y});

    std::set<NodeIndex> zeros;
    for (auto [x, y] : pairs) {
        for (NodeIndex z : g.neighbors(x))
            if (z != y) zeros.insert(z);
        for (NodeIndex z : g.neighbors(y))
            if (z != x) zeros.insert(z);
    }
    for (NodeIndex z : zeros) out.push_back({Kind::Zero, Context::Strong, z, z});
    return out;
}

std::string describe(const Graph& g, const ForcedConstraint& fc) {
    std::string ctx = fc.context == ForcedConstraint::Context::Mode ? "mode" : "strong";
    if (fc.kind == ForcedConstraint::Kind::Equal)
        return ctx + ": p_" + g.label(fc.x) + " = p_" + g.label(fc.y);
    return ctx + ": p_" + g.label(fc.x) + " = 0";
}

namespace {

std::string render(const Graph& g, const std::vector<ForcedConstraint>& report) {
    std::string out;
    for (const auto& fc : report) {
        if (!out.empty()) out += '\n';
        out += describe(g, fc);
    }
    return out;
}

} // namespace

NotIndependent::NotIndependent(const Graph& g, std::vector<ForcedConstraint> report)
    : InvalidInput("mode set is not independent"), report_(std::move(report)),
      details_(render(g, report_)) {}

void require_independent(const Graph& g, const ModeSet& c) {
    auto report = degeneracy_report(g, c);
    if (!report.empty()) throw NotIndependent(g, std::move(report));
}

} // namespace modepoly
