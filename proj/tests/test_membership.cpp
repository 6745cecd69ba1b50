#include "support.hpp"

#include "modepoly/error.hpp"
#include "modepoly/membership.hpp"
#include "modepoly/mode_polytope.hpp"
#include "modepoly/oracle.hpp"
#include "modepoly/strong_polytope.hpp"

#include <doctest.h>

using namespace modepoly;
using support::q;

TEST_CASE("modes of a distribution") {
    Graph g = generate_path(4);
    Distribution p(RationalVector{q(3, 10), q(1, 10), q(3, 10), q(3, 10)});
    CHECK(modes_of(p, g) == NodeSet{0, 2, 3});
    CHECK(modes_of(p, g, Strictness::Strict) == NodeSet{0});
    CHECK(strong_modes_of(p, g) == NodeSet{0, 3});
    CHECK(strong_modes_of(p, g, Strictness::Strict) == NodeSet{0});

    Distribution flat = Distribution::uniform(4);
    CHECK(modes_of(flat, g).size() == 4);
    CHECK(modes_of(flat, g, Strictness::Strict).empty());
    CHECK_THROWS_AS(modes_of(Distribution::uniform(3), g), DimensionMismatch);
}

TEST_CASE("membership certificates") {
    auto [g, c] = support::square_case();
    Distribution inside(RationalVector{q(1, 10), q(4, 10), q(3, 10), q(2, 10)});
    auto r = in_mode_polytope(inside, g, c);
    CHECK(r.member);
    CHECK_FALSE(r.violation.has_value());

    Distribution outside(RationalVector{q(1, 2), q(1, 4), q(1, 4), 0});
    r = in_mode_polytope(outside, g, c);
    REQUIRE_FALSE(r.member);
    CHECK(r.violation->inequality.kind == Inequality::Kind::Mode);
    CHECK(describe(g.labels(), r.violation->inequality) == "mode:01>=00");
    CHECK(r.violation->lhs == q(1, 4));
    CHECK(r.violation->rhs == q(1, 2));
    CHECK(r.violation->slack == q(-1, 4));

    CHECK(in_strong_polytope(inside, g, c).member);
    Distribution weak(RationalVector{q(1, 10), q(3, 10), q(7, 20), q(1, 4)});
    CHECK(in_mode_polytope(weak, g, c).member);
    auto s = in_strong_polytope(weak, g, c);
    REQUIRE_FALSE(s.member);
    CHECK(describe(g.labels(), s.violation->inequality) == "strong:01>=sum(N(01))");
}

// Membership agrees with the definition: every c is a (strong) mode of p.
TEST_CASE("membership agrees with modes_of on random points") {
    SplitMix64 rng(41);
    int mode_hits = 0, strong_hits = 0;
    for (int t = 0; t < 2000; ++t) {
        auto [g, c] = support::random_case(rng, 1, 8);
        Distribution p = support::random_distribution(rng, g.size());
        const NodeSet modes = modes_of(p, g);
        const NodeSet strong = strong_modes_of(p, g);
        const bool all_modes = std::includes(modes.begin(), modes.end(), c.members().begin(), c.members().end());
        const bool all_strong = std::includes(strong.begin(), strong.end(), c.members().begin(), c.members().end());
        CHECK(in_mode_polytope(p, g, c).member == all_modes);
        CHECK(in_strong_polytope(p, g, c).member == all_strong);
        mode_hits += all_modes;
        strong_hits += all_strong;
        if (all_strong) CHECK(all_modes);
    }
    CHECK(mode_hits > 50);
    CHECK(strong_hits > 10);
}

TEST_CASE("mixtures of unimodal distributions") {
    Graph g = generate_hypercube(3);
    for (unsigned k = 1; k <= 3; ++k) {
        MixtureReport r = mixture_strong_mode_test(g, k, 300, 99 + k);
        CHECK(r.trials == 300);
        CHECK(r.violations == 0);
        CHECK(r.max_strict_strong_modes <= k);
        CHECK_FALSE(r.counterexample.has_value());
    }
    CHECK_THROWS_AS(mixture_strong_mode_test(g, 0, 1, 1), InvalidInput);
    // On a single edge a sample has exactly one strict mode almost surely.
    Graph edge = generate_path(2);
    CHECK(mixture_strong_mode_test(edge, 2, 50, 5).violations == 0);
}
