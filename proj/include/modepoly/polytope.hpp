#pragma once

#include "modepoly/error.hpp"
#include "modepoly/graph.hpp"
#include "modepoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modepoly {

// Exact probability vector indexed by canonical node order.
class Distribution {
public:
    Distribution() = default;
    // Throws InvalidInput on negative entries or a sum different from 1.
    explicit Distribution(RationalVector probabilities);

    static Distribution point_mass(std::size_t n, NodeIndex x);
    static Distribution uniform(std::size_t n);
    static Distribution uniform_on(std::size_t n, std::span<const NodeIndex> support);
    // Rescales a nonnegative, nonzero vector to sum 1.
    static Distribution normalized(RationalVector weights);

    std::size_t size() const noexcept { return p_.size(); }
    const Rational& operator[](NodeIndex x) const { return p_[x]; }
    const RationalVector& values() const noexcept { return p_; }
    NodeSet support() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    RationalVector p_;
};

// Linear inequality <coefficients, p> >= 0 over the simplex, tagged with the
// rule that produced it.
struct Inequality {
    enum class Kind {
        Positivity, // p_x >= 0
        Mode,       // p_x >= p_y (x a mode, or x above y in a poset)
        StrongMode, // p_x >= sum of p_y over neighbors y
    };

    Kind kind;
    NodeIndex x;
    NodeIndex y = 0; // Mode only
    RationalVector coefficients;

    Rational evaluate(std::span<const Rational> p) const;

    static Inequality positivity(std::size_t n, NodeIndex x);
    static Inequality mode(std::size_t n, NodeIndex x, NodeIndex y);
    static Inequality strong_mode(const Graph& g, NodeIndex x);
};

// "positivity:x", "mode:x>=y", "strong:x>=sum(N(x))".
std::string describe(const std::vector<std::string>& labels, const Inequality& ineq);

// Evidence that p violates an inequality: lhs and rhs are the positive and
// negated negative parts of <coefficients, p>; slack = lhs - rhs < 0.
struct ViolationCertificate {
    Inequality inequality;
    Rational lhs;
    Rational rhs;
    Rational slack;
};

// Polytope inside the simplex: listed inequalities plus the implicit
// normalization sum(p) = 1. Inequalities are in canonical order: positivity by
// node, then (strong) mode inequalities by (x, y).
struct HRep {
    std::size_t dimension = 0; // number of coordinates
    std::vector<Inequality> inequalities;

    bool contains(std::span<const Rational> p) const;
    std::optional<ViolationCertificate> first_violation(std::span<const Rational> p) const;
};

struct Generator {
    enum class Kind {
        PointMass, // delta_x
        Witness,   // uniform on W together with its neighboring modes
        Anchor,    // strong-mode vertex anchored at a node
        Unlabelled // found by the oracle, no closed-form generator
    };

    Kind kind = Kind::Unlabelled;
    NodeSet nodes; // {x} for PointMass/Anchor, W for Witness

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct Vertex {
    Generator generator;
    Distribution point;
};

struct VRep {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    std::vector<RationalVector> points() const;
};

// Same vertex sets, ignoring order and generators.
bool same_point_set(const VRep& a, const VRep& b);

struct FacetInfo {
    Inequality inequality;
    bool facet;
    std::string reason;
};

// Weighted generator in a convex decomposition.
struct WeightedVertex {
    Vertex vertex;
    Rational weight;
};

// Sum of weight * point; used to check decompositions exactly.
RationalVector recombine(std::span<const WeightedVertex> parts, std::size_t n);

// Thrown when a query needs a point of a polytope and gets one outside it.
class NotInPolytope : public InvalidInput {
public:
    NotInPolytope(ViolationCertificate cert, const std::string& message)
        : InvalidInput(message), cert_(std::move(cert)) {}
    const ViolationCertificate& certificate() const noexcept { return cert_; }

private:
    ViolationCertificate cert_;
};

} // namespace modepoly
