#pragma once

#include "modepoly/error.hpp"
#include "modepoly/graph.hpp"

#include <string>
#include <vector>

namespace modepoly {

// A constraint implied on every distribution of the (strong) mode polytope
// when the prescribed modes are not independent.
struct ForcedConstraint {
    enum class Kind { Equal, Zero };
    enum class Context { Mode, Strong };

    Kind kind;
    Context context;
    NodeIndex x;
    NodeIndex y; // unused for Kind::Zero

    friend bool operator==(const ForcedConstraint&, const ForcedConstraint&) = default;
};

// For each adjacent pair x, y in c: p_x = p_y (mode and strong contexts) and,
// in the strong context, p_z = 0 for every other neighbor z of x or y.
// Empty exactly when c is independent.
std::vector<ForcedConstraint> degeneracy_report(const Graph& g, const ModeSet& c);

std::string describe(const Graph& g, const ForcedConstraint& fc);

class NotIndependent : public InvalidInput {
public:
    NotIndependent(const Graph& g, std::vector<ForcedConstraint> report);

    const std::vector<ForcedConstraint>& report() const noexcept { return report_; }
    // One line per forced constraint, for diagnostics.
    const std::string& details() const noexcept { return details_; }

private:
    std::vector<ForcedConstraint> report_;
    std::string details_;
};

// Throws NotIndependent carrying the degeneracy report.
void require_independent(const Graph& g, const ModeSet& c);

} // namespace modepoly
