#pragma once

#include "modepoly/graph.hpp"
#include "modepoly/kernels/unit_system.hpp"
#include "modepoly/polytope.hpp"
#include "modepoly/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace modepoly {

// ---------------------------------------------------------------------------
// Brute-force vertex enumeration
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxOracleDimension = 10;

// Every basic feasible solution of h: choose dimension-1 inequalities, make
// them tight together with sum(p) = 1, solve exactly and keep feasible unique
// points. Throws BudgetExceeded above max_dimension coordinates.
VRep naive_vertex_enum(const HRep& h, std::size_t max_dimension = kMaxOracleDimension);

// Rank of the tight inequality rows of h at p, with the normalization row.
// Equals h.dimension exactly when p is a vertex.
std::size_t tight_rank(const HRep& h, std::span<const Rational> p);

// Affine rank of the vertices lying on the hyperplane of ineq, or -1 when none
// do. An inequality of a full-dimensional polytope in the simplex over n
// coordinates defines a facet exactly when this equals n - 2.
std::ptrdiff_t incidence_rank(const VRep& v, const Inequality& ineq);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

// Uniform samples from the probability simplex (flat Dirichlet through
// normalized exponential variates), deterministic given the seed.
class SimplexSampler {
public:
    SimplexSampler(std::size_t n, std::uint64_t seed);

    // Floating-point sample (inexact).
    std::vector<double> next();
    // Next sample truncated to fixed point: out[i] = floor(p_i * 2^53).
    void next_fixed(std::span<std::int64_t> out);

    std::size_t dimension() const noexcept { return n_; }

private:
    std::size_t n_;
    SplitMix64 rng_;
    std::vector<double> scratch_;
};

// First sample of the stream for seed; entries are doubles, not exact.
std::vector<double> sample_simplex(std::size_t n, std::uint64_t seed);

// Exact distribution proportional to a fixed-point sample.
Distribution from_fixed_point(std::span<const std::int64_t> masses);

// ---------------------------------------------------------------------------
// Monte Carlo volume
// ---------------------------------------------------------------------------

struct McEstimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    Rational estimate;       // hits / trials
    double stderr_value = 0; // sqrt(q (1 - q) / trials), q = estimate
    Rational stderr_bound;   // rational upper bound on stderr_value, within 2^-32

    double estimate_value() const { return estimate.get_d(); }
    // |estimate - exact| <= k * stderr, evaluated exactly against the bound.
    bool within(const Rational& exact, unsigned k) const;
};

McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials);

// Samples per substream; chunk i draws from derive_seed(seed, i), so the
// sample set depends only on (seed, trials).
inline constexpr std::size_t kMcChunk = 4096;

// Exact predicate on each sample, converted to a rational distribution.
McEstimate montecarlo_volume(const std::function<bool(const Distribution&)>& predicate,
                             std::size_t n, std::uint64_t trials, std::uint64_t seed);

// Fixed-point batch path for unit-coefficient H-representations. Chunks are
// spread over `workers` threads; the result does not depend on the worker
// count or backend.
McEstimate montecarlo_volume(const HRep& h, std::uint64_t trials, std::uint64_t seed,
                             unsigned workers = 1,
                             kernels::Backend backend = kernels::default_backend());

// ---------------------------------------------------------------------------
// Mixtures of unimodal distributions
// ---------------------------------------------------------------------------

inline constexpr unsigned kUnimodalRetryBudget = 1000;

struct MixtureReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::size_t max_strict_strong_modes = 0;
    std::uint64_t rejected_components = 0;
    std::optional<Distribution> counterexample;
};

// Draws k components with exactly one strict mode each (rejection from the flat
// Dirichlet), mixes them with random weights and checks that the mixture has at
// most k strict strong modes. Throws BudgetExceeded when a component needs
// more than retry_budget draws.
MixtureReport mixture_strong_mode_test(const Graph& g, unsigned k, std::uint64_t trials,
                                       std::uint64_t seed,
                                       unsigned retry_budget = kUnimodalRetryBudget);

} // namespace modepoly
