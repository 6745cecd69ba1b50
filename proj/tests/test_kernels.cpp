#include "support.hpp"

#include "modepoly/error.hpp"
#include "modepoly/kernels/unit_system.hpp"
#include "modepoly/mode_polytope.hpp"
#include "modepoly/oracle.hpp"
#include "modepoly/strong_polytope.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace modepoly;
using support::q;
using namespace modepoly::kernels;

namespace {

// Plain evaluation of the original inequalities on the integer sample.
bool reference_member(const HRep& h, const FixedPointBatch& batch, std::size_t s) {
    for (const auto& ineq : h.inequalities) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < h.dimension; ++i)
            if (sgn(ineq.coefficients[i]) != 0) acc += ineq.coefficients[i].get_num() * BigInt(std::to_string(batch.column(i)[s]));
        if (acc < 0) return false;
    }
    return true;
}

void fill(SplitMix64& rng, FixedPointBatch& batch, std::size_t count, bool ties) {
    const std::int64_t one = std::int64_t{1} << kFixedPointBits;
    for (std::size_t s = 0; s < count; ++s)
        for (std::size_t i = 0; i < batch.dimension(); ++i) {
            std::int64_t v = static_cast<std::int64_t>(rng.next() >> 11);
            if (ties) v = static_cast<std::int64_t>(rng.next_below(4)) * (one / 4);
            batch.column(i)[s] = v;
        }
    batch.set_count(count);
}

} // namespace

TEST_CASE("scalar backend is always available") {
    auto all = available_backends();
    REQUIRE_FALSE(all.empty());
    CHECK(all.front() == Backend::Scalar);
    CHECK(name(Backend::Avx2) == "avx2");
}

TEST_CASE("compile keeps the term layout") {
    auto [g, c] = support::square_case();
    UnitSystem sys = UnitSystem::compile(mode_hrep(g, c));
    CHECK(sys.size() == 8);
    CHECK(sys.offsets.back() == sys.nodes.size());
    CHECK(sys.offsets[1] - sys.offsets[0] == 1);
    CHECK(sys.offsets[5] - sys.offsets[4] == 2);

    HRep bad{2, {Inequality::positivity(2, 0)}};
    bad.inequalities[0].coefficients[0] = q(1, 2);
    CHECK_THROWS_AS(UnitSystem::compile(bad), InvalidInput);
}

TEST_CASE("every backend agrees with the scalar reference") {
    SplitMix64 rng(51);
    for (int t = 0; t < 40; ++t) {
        auto [g, c] = support::random_case(rng, 1, 16);
        for (const HRep& h : {mode_hrep(g, c), strong_hrep(g, c)}) {
            UnitSystem sys = UnitSystem::compile(h);
            // Odd counts exercise the vector tails.
            const std::size_t count = 1 + rng.next_below(203);
            FixedPointBatch batch(g.size(), 256);
            fill(rng, batch, count, t % 2 == 0);
            std::vector<std::uint8_t> expected(count);
            detail::evaluate_scalar(sys, batch, expected.data());
            for (std::size_t s = 0; s < count; ++s) CHECK(expected[s] == reference_member(h, batch, s));
            for (Backend b : available_backends()) {
                std::vector<std::uint8_t> got(count, 7);
                evaluate(b, sys, batch, got);
                CHECK(got == expected);
                CHECK(count_members(b, sys, batch) ==
                      static_cast<std::size_t>(std::count(expected.begin(), expected.end(), 1)));
            }
        }
    }
}

TEST_CASE("kernels on extreme values") {
    auto [g, c] = support::parity_case(3);
    HRep h = strong_hrep(g, c);
    UnitSystem sys = UnitSystem::compile(h);
    FixedPointBatch batch(8, 8);
    const std::int64_t one = std::int64_t{1} << kFixedPointBits;
    // Sample s puts all mass on node s; only the even-parity nodes pass.
    for (std::size_t s = 0; s < 8; ++s) batch.column(s)[s] = one;
    batch.set_count(8);
    for (Backend b : available_backends()) {
        std::vector<std::uint8_t> out(8);
        evaluate(b, sys, batch, out);
        for (std::size_t s = 0; s < 8; ++s) CHECK(out[s] == (c.contains(s) ? 1 : 0));
    }
}

TEST_CASE("environment override") {
    const Backend widest = available_backends().back();
    setenv("MODEPOLY_KERNEL", "scalar", 1);
    CHECK(default_backend() == Backend::Scalar);
    setenv("MODEPOLY_KERNEL", "no-such-kernel", 1);
    CHECK(default_backend() == widest);
    unsetenv("MODEPOLY_KERNEL");
    CHECK(default_backend() == widest);
}

TEST_CASE("unavailable backends and bad buffers are rejected") {
    FixedPointBatch batch(2, 4);
    batch.set_count(4);
    UnitSystem sys = UnitSystem::compile(HRep{2, {Inequality::positivity(2, 0)}});
    std::vector<std::uint8_t> small(2);
    CHECK_THROWS_AS(evaluate(Backend::Scalar, sys, batch, small), InvalidInput);
    CHECK_THROWS_AS(batch.set_count(5), InvalidInput);
    FixedPointBatch wrong(3, 4);
    std::vector<std::uint8_t> out(4);
    CHECK_THROWS_AS(evaluate(Backend::Scalar, sys, wrong, out), DimensionMismatch);
    for (Backend b : {Backend::Avx2, Backend::Neon}) {
        auto all = available_backends();
        if (std::find(all.begin(), all.end(), b) == all.end()) CHECK_THROWS_AS(evaluate(b, sys, batch, out), InvalidInput);
    }
}
