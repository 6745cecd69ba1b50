#include "support.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"
#include "modepoly/linalg.hpp"
#include "modepoly/membership.hpp"
#include "modepoly/mode_polytope.hpp"
#include "modepoly/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace modepoly;
using support::q;

namespace {

// W connected by paths in g that alternate between W and modes adjacent to W.
bool alternating_connected(const Graph& g, const ModeSet& c, const NodeSet& w) {
    std::set<NodeIndex> in_w(w.begin(), w.end());
    std::set<NodeIndex> seen{w.front()};
    std::vector<NodeIndex> stack{w.front()};
    while (!stack.empty()) {
        NodeIndex x = stack.back();
        stack.pop_back();
        for (NodeIndex m : g.neighbors(x)) {
            if (!c.contains(m)) continue;
            for (NodeIndex y : g.neighbors(m))
                if (in_w.count(y) && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen.size() == w.size();
}

std::set<NodeSet> witness_sets(const VRep& v) {
    std::set<NodeSet> out;
    for (const auto& vx : v.vertices)
        if (vx.generator.kind == Generator::Kind::Witness) out.insert(vx.generator.nodes);
    return out;
}

std::set<NodeSet> oracle_witness_sets(const Graph& g, const ModeSet& c) {
    NodeSet free;
    for (NodeIndex x = 0; x < g.size(); ++x)
        if (!c.contains(x)) free.push_back(x);
    std::set<NodeSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
        NodeSet w;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1) w.push_back(free[i]);
        if (alternating_connected(g, c, w)) out.insert(w);
    }
    return out;
}

// Vertices of the simplex of points ascending along `order`: uniform on the
// top k elements, k = 1..n.
std::vector<RationalVector> chain_simplex(const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::vector<RationalVector> out;
    for (std::size_t k = 1; k <= n; ++k) {
        RationalVector p(n);
        for (std::size_t i = n - k; i < n; ++i) p[order[i]] = Rational(1, static_cast<unsigned long>(k));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("square with two adjacent-corner modes") {
    auto [g, c] = support::square_case();
    HRep h = mode_hrep(g, c);
    CHECK(h.inequalities.size() == 4 + 4);

    VRep v = mode_vertices(g, c);
    REQUIRE(v.size() == 5);
    const Rational t(1, 3), f(1, 4);
    std::vector<RationalVector> expected{
        {0, 1, 0, 0}, {0, 0, 1, 0}, {t, t, t, 0}, {0, t, t, t}, {f, f, f, f}};
    CHECK(v.points() == expected);
    CHECK(same_point_set(v, naive_vertex_enum(h)));
    CHECK(mode_volume_ratio(g, c) == q(1, 6));
    CHECK(mode_dimension(g, c) == 3);
}

TEST_CASE("hypercube vertex counts") {
    // One mode per neighborhood, modes at distance at least three:
    // k (2^n - 1) + 2^n - k n vertices.
    auto a3 = support::cube_case(3, {"000"});
    CHECK(mode_vertices(a3.graph, a3.modes).size() == 12);
    auto a4 = support::cube_case(4, {"0000", "1110"});
    CHECK(mode_vertices(a4.graph, a4.modes).size() == 38);
    auto a5 = support::cube_case(5, {"00000", "11100"});
    CHECK(mode_vertices(a5.graph, a5.modes).size() == 2 * 31 + 32 - 10);

    auto b2 = support::parity_case(2);
    CHECK(mode_vertices(b2.graph, b2.modes).size() == 5);
    auto b3 = support::parity_case(3);
    CHECK(mode_vertices(b3.graph, b3.modes).size() == 19);
    CHECK(mode_volume_ratio(b3.graph, b3.modes) == q(1, 56));
}

TEST_CASE("vertex list matches brute-force enumeration") {
    SplitMix64 rng(21);
    for (int t = 0; t < 60; ++t) {
        auto [g, c] = support::random_case(rng, 1, 7);
        HRep h = mode_hrep(g, c);
        VRep v = mode_vertices(g, c);
        VRep oracle = naive_vertex_enum(h);
        CHECK(same_point_set(v, oracle));
        CHECK(v.size() == oracle.size());
    }
    for (const auto& [g, c] : {support::cube_case(3, {"000"}), support::parity_case(3),
                               support::cube_case(3, {"000", "111"})})
        CHECK(same_point_set(mode_vertices(g, c), naive_vertex_enum(mode_hrep(g, c))));
}

TEST_CASE("witness sets are exactly the alternating-path connected sets") {
    SplitMix64 rng(22);
    for (int t = 0; t < 80; ++t) {
        auto [g, c] = support::random_case(rng, 2, 14);
        VRep v = mode_vertices(g, c);
        CHECK(witness_sets(v) == oracle_witness_sets(g, c));
        for (const auto& vx : v.vertices) {
            CHECK(tight_rank(mode_hrep(g, c), vx.point.values()) == g.size());
            if (vx.generator.kind == Generator::Kind::Witness)
                CHECK(is_mode_vertex(g, c, vx.generator.nodes));
        }
        // Generators come deltas first, then witnesses by size.
        std::size_t last = 0;
        for (std::size_t i = c.size(); i < v.size(); ++i) {
            CHECK(v.vertices[i].generator.kind == Generator::Kind::Witness);
            CHECK(v.vertices[i].generator.nodes.size() >= last);
            last = v.vertices[i].generator.nodes.size();
        }
    }
}

TEST_CASE("is_mode_vertex") {
    auto [g, c] = support::cube_case(3, {"000"});
    const NodeIndex a = g.index_of("001"), b = g.index_of("010"), far = g.index_of("111");
    CHECK(is_mode_vertex(g, c, NodeSet{a, b}));
    CHECK_FALSE(is_mode_vertex(g, c, NodeSet{a, far}));
    CHECK(is_mode_vertex(g, c, NodeSet{far}));
    CHECK_THROWS_AS(is_mode_vertex(g, c, NodeSet{}), InvalidInput);
    CHECK_THROWS_AS(is_mode_vertex(g, c, NodeSet{0}), InvalidInput);
}

TEST_CASE("vertex budget") {
    auto [g, c] = support::parity_case(4);
    CHECK_THROWS_AS(mode_vertices(g, c, 100), BudgetExceeded);
    CHECK(mode_vertices(g, c).size() == 8 + 251);
}

TEST_CASE("mode facet examples") {
    auto sq = support::square_case();
    auto facets = mode_facets(sq.graph, sq.modes);
    CHECK(std::count_if(facets.begin(), facets.end(), [](const FacetInfo& f) { return f.facet; }) == 6);
    CHECK_FALSE(facets[1].facet);
    CHECK_FALSE(facets[2].facet);

    Graph iso({"a", "b", "z"}, {{"a", "b"}});
    auto iso_facets = mode_facets(iso, ModeSet::from_labels(iso, {"z"}));
    CHECK(iso_facets[2].facet);

    auto a3 = support::cube_case(3, {"000"});
    auto cube = mode_facets(a3.graph, a3.modes);
    CHECK_FALSE(cube[0].facet);
    CHECK(std::count_if(cube.begin(), cube.end(), [](const FacetInfo& f) { return f.facet; }) == 10);
}

TEST_CASE("facet classification agrees with vertex incidence") {
    SplitMix64 rng(23);
    for (int t = 0; t < 60; ++t) {
        auto [g, c] = support::random_case(rng, 2, 9);
        HRep h = mode_hrep(g, c);
        VRep v = mode_vertices(g, c);
        auto facets = mode_facets(g, c);
        REQUIRE(facets.size() == h.inequalities.size());
        for (const auto& f : facets) {
            const bool incidence = incidence_rank(v, f.inequality) == static_cast<std::ptrdiff_t>(g.size()) - 2;
            CHECK(incidence == f.facet);
            if (f.inequality.kind == Inequality::Kind::Positivity)
                CHECK(f.facet == (!c.contains(f.inequality.x) || g.isolated(f.inequality.x)));
            else
                CHECK(f.facet);
        }
    }
}

TEST_CASE("volume equals the sum of chain simplex volumes") {
    SplitMix64 rng(24);
    for (int t = 0; t < 30; ++t) {
        auto [g, c] = support::random_case(rng, 2, 6);
        Poset order = poset_from_modes(g, c);
        Rational total = 0;
        for (const auto& ext : enumerate_extensions(order)) total += simplex_volume_ratio(chain_simplex(ext));
        CHECK(total == mode_volume_ratio(g, c));
    }
}

TEST_CASE("poset volume") {
    std::vector<Poset::Pair> r{{0, 1}, {1, 2}};
    Poset chain = Poset::from_indices({"a", "b", "c"}, r);
    CHECK(mode_volume_ratio_poset(chain) == q(1, 6));
    HRep h = mode_hrep_poset(chain);
    CHECK(h.inequalities.size() == 3 + 2);
    CHECK(same_point_set(naive_vertex_enum(h), VRep{[&] {
              std::vector<Vertex> vs;
              for (auto& p : chain_simplex({0, 1, 2})) vs.push_back({Generator{}, Distribution(p)});
              return vs;
          }()}));
}

TEST_CASE("locate_simplex") {
    auto [g, c] = support::square_case();
    Poset order = poset_from_modes(g, c);

    // Ties: poset-lower nodes first, then canonical order.
    auto flat = locate_simplex(Distribution::uniform(4), g, c);
    CHECK(flat == std::vector<NodeIndex>{0, 3, 1, 2});

    Distribution p(RationalVector{q(1, 10), q(4, 10), q(3, 10), q(2, 10)});
    CHECK(locate_simplex(p, g, c) == std::vector<NodeIndex>{0, 3, 2, 1});

    Distribution out(RationalVector{q(1, 2), q(1, 2), 0, 0});
    CHECK_THROWS_AS(locate_simplex(out, g, c), NotInPolytope);

    SplitMix64 rng(25);
    for (int t = 0; t < 200; ++t) {
        auto inst = support::random_case(rng, 1, 10);
        VRep v = mode_vertices(inst.graph, inst.modes);
        Distribution m = support::random_member(rng, v);
        auto asc = locate_simplex(m, inst.graph, inst.modes);
        CHECK(is_linear_extension(poset_from_modes(inst.graph, inst.modes), asc));
        for (std::size_t i = 1; i < asc.size(); ++i) CHECK(m[asc[i - 1]] <= m[asc[i]]);
    }
    (void)order;
}

TEST_CASE("decompose_mode recombines exactly") {
    SplitMix64 rng(26);
    for (int t = 0; t < 200; ++t) {
        auto [g, c] = support::random_case(rng, 1, 10);
        VRep v = mode_vertices(g, c);
        Distribution p = support::random_member(rng, v);
        auto parts = decompose_mode(p, g, c);
        CHECK(recombine(parts, g.size()) == p.values());
        Rational total = 0;
        for (const auto& part : parts) {
            CHECK(sgn(part.weight) > 0);
            total += part.weight;
            if (part.vertex.generator.kind == Generator::Kind::Witness)
                CHECK(is_mode_vertex(g, c, part.vertex.generator.nodes));
        }
        CHECK(total == 1);
    }
}

TEST_CASE("decompose_mode on vertices returns the vertex") {
    auto [g, c] = support::parity_case(3);
    for (const auto& vx : mode_vertices(g, c).vertices) {
        auto parts = decompose_mode(vx.point, g, c);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].weight == 1);
        CHECK(parts[0].vertex.generator == vx.generator);
    }
}

TEST_CASE("dependent mode sets are rejected") {
    Graph g = generate_path(3);
    ModeSet c(g, {0, 1});
    CHECK_THROWS_AS(mode_hrep(g, c), NotIndependent);
    CHECK_THROWS_AS(mode_vertices(g, c), NotIndependent);
    CHECK_THROWS_AS(mode_volume_ratio(g, c), NotIndependent);
}

TEST_CASE("empty mode set is the whole simplex") {
    Graph g = generate_cycle(5);
    ModeSet c(g, {});
    CHECK(mode_vertices(g, c).size() == 5);
    CHECK(mode_volume_ratio(g, c) == 1);
}
