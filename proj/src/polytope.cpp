#include "modepoly/polytope.hpp"

#include "modepoly/error.hpp"

#include <algorithm>

namespace modepoly {

Distribution::Distribution(RationalVector probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) throw InvalidInput("distribution over an empty set");
    Rational sum = 0;
    for (auto& v : p_) {
        v.canonicalize();
        if (sgn(v) < 0) throw InvalidInput("negative probability " + to_string(v));
        sum += v;
    }
    if (sum != 1) throw InvalidInput("probabilities sum to " + to_string(sum) + ", not 1");
}

Distribution Distribution::point_mass(std::size_t n, NodeIndex x) {
    if (x >= n) throw InvalidInput("point mass outside the node range");
    RationalVector p(n);
    p[x] = 1;
    return Distribution(std::move(p));
}

Distribution Distribution::uniform(std::size_t n) {
    return Distribution(RationalVector(n, Rational(1, static_cast<unsigned long>(n))));
}

Distribution Distribution::uniform_on(std::size_t n, std::span<const NodeIndex> support) {
    if (support.empty()) throw InvalidInput("uniform distribution on an empty support");
    RationalVector p(n);
    const Rational mass(1, static_cast<unsigned long>(support.size()));
    for (NodeIndex x : support) p.at(x) = mass;
    return Distribution(std::move(p));
}

Distribution Distribution::normalized(RationalVector weights) {
    Rational sum = 0;
    for (const auto& w : weights) {
        if (sgn(w) < 0) throw InvalidInput("negative weight");
        sum += w;
    }
    if (sgn(sum) == 0) throw InvalidInput("all weights are zero");
    for (auto& w : weights) w /= sum;
    return Distribution(std::move(weights));
}

NodeSet Distribution::support() const {
    NodeSet out;
    for (NodeIndex x = 0; x < p_.size(); ++x)
        if (sgn(p_[x]) != 0) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------

Rational Inequality::evaluate(std::span<const Rational> p) const {
    if (p.size() != coefficients.size()) throw DimensionMismatch("inequality/point length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (sgn(coefficients[i]) != 0) acc += coefficients[i] * p[i];
    return acc;
}

Inequality Inequality::positivity(std::size_t n, NodeIndex x) {
    Inequality q{Kind::Positivity, x, 0, RationalVector(n)};
    q.coefficients.at(x) = 1;
    return q;
}

Inequality Inequality::mode(std::size_t n, NodeIndex x, NodeIndex y) {
    if (x == y) throw InvalidInput("mode inequality needs two distinct nodes");
    Inequality q{Kind::Mode, x, y, RationalVector(n)};
    q.coefficients.at(x) = 1;
    q.coefficients.at(y) = -1;
    return q;
}

Inequality Inequality::strong_mode(const Graph& g, NodeIndex x) {
    Inequality q{Kind::StrongMode, x, 0, RationalVector(g.size())};
    q.coefficients.at(x) = 1;
    for (NodeIndex y : g.neighbors(x)) q.coefficients[y] = -1;
    return q;
}

std::string describe(const std::vector<std::string>& labels, const Inequality& ineq) {
    switch (ineq.kind) {
    case Inequality::Kind::Positivity:
        return "positivity:" + labels.at(ineq.x);
    case Inequality::Kind::Mode:
        return "mode:" + labels.at(ineq.x) + ">=" + labels.at(ineq.y);
    case Inequality::Kind::StrongMode:
        return "strong:" + labels.at(ineq.x) + ">=sum(N(" + labels.at(ineq.x) + "))";
    }
    return "?";
}

// ---------------------------------------------------------------------------

bool HRep::contains(std::span<const Rational> p) const { return !first_violation(p).has_value(); }

std::optional<ViolationCertificate> HRep::first_violation(std::span<const Rational> p) const {
    if (p.size() != dimension) throw DimensionMismatch("point length does not match the polytope");
    for (const auto& ineq : inequalities) {
        Rational lhs = 0;
        Rational rhs = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            int s = sgn(ineq.coefficients[i]);
            if (s > 0)
                lhs += ineq.coefficients[i] * p[i];
            else if (s < 0)
                rhs -= ineq.coefficients[i] * p[i];
        }
        if (lhs < rhs) {
            Rational slack = lhs - rhs;
            return ViolationCertificate{ineq, std::move(lhs), std::move(rhs), std::move(slack)};
        }
    }
    return std::nullopt;
}

std::vector<RationalVector> VRep::points() const {
    std::vector<RationalVector> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.point.values());
    return out;
}

namespace {

bool lex_less(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& l, const Rational& r) { return l < r; });
}

} // namespace

bool same_point_set(const VRep& a, const VRep& b) {
    auto pa = a.points();
    auto pb = b.points();
    std::sort(pa.begin(), pa.end(), lex_less);
    std::sort(pb.begin(), pb.end(), lex_less);
    pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
    pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
    return pa == pb;
}

RationalVector recombine(std::span<const WeightedVertex> parts, std::size_t n) {
    RationalVector out(n);
    for (const auto& part : parts) {
        const auto& v = part.vertex.point.values();
        if (v.size() != n) throw DimensionMismatch("vertex length mismatch");
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(v[i]) != 0) out[i] += part.weight * v[i];
    }
    return out;
}

} // namespace modepoly
