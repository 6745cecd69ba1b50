#include "modepoly/oracle.hpp"

#include "modepoly/error.hpp"
#include "modepoly/linalg.hpp"
#include "modepoly/membership.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace modepoly {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

// ---------------------------------------------------------------------------
// Brute-force vertex enumeration
// ---------------------------------------------------------------------------

namespace {

// Reduced row echelon form over [coefficients | rhs], grown one row at a time.
struct Rref {
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;

    // Adds the row if it is independent of the current rows.
    bool add(RationalVector row) {
        const std::size_t width = row.size() - 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t pc = pivots[r];
            if (sgn(row[pc]) == 0) continue;
            const Rational factor = row[pc];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(rows[r][j]) != 0) row[j] -= factor * rows[r][j];
        }
        std::size_t pc = 0;
        while (pc < width && sgn(row[pc]) == 0) ++pc;
        if (pc == width) return false; // dependent (or inconsistent, which cannot occur here)
        const Rational lead = row[pc];
        for (auto& v : row) v /= lead;
        for (auto& other : rows) {
            if (sgn(other[pc]) == 0) continue;
            const Rational factor = other[pc];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(row[j]) != 0) other[j] -= factor * row[j];
        }
        rows.push_back(std::move(row));
        pivots.push_back(pc);
        return true;
    }

    // Unique solution once the system has full column rank.
    RationalVector solution(std::size_t width) const {
        RationalVector x(width);
        for (std::size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = rows[r][width];
        return x;
    }
};

bool lex_less(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& l, const Rational& r) { return l < r; });
}

class BasisSearch {
public:
    explicit BasisSearch(const HRep& h) : h_(h), n_(h.dimension) {}

    std::vector<RationalVector> run() {
        Rref start;
        RationalVector ones(n_ + 1, Rational(1));
        start.add(std::move(ones));
        descend(start, 0);
        return {found_.begin(), found_.end()};
    }

private:
    void descend(const Rref& basis, std::size_t next) {
        if (basis.rows.size() == n_) {
            RationalVector x = basis.solution(n_);
            if (h_.contains(x)) found_.insert(std::move(x));
            return;
        }
        const std::size_t needed = n_ - basis.rows.size();
        for (std::size_t k = next; k + needed <= h_.inequalities.size(); ++k) {
            Rref extended = basis;
            RationalVector row = h_.inequalities[k].coefficients;
            row.emplace_back(0);
            if (extended.add(std::move(row))) descend(extended, k + 1);
        }
    }

    const HRep& h_;
    std::size_t n_;
    std::set<RationalVector, decltype(&lex_less)> found_{&lex_less};
};

} // namespace

VRep naive_vertex_enum(const HRep& h, std::size_t max_dimension) {
    if (h.dimension == 0) throw InvalidInput("polytope has no coordinates");
    if (h.dimension > max_dimension)
        throw BudgetExceeded("naive vertex enumeration dimension cap exceeded", h.dimension);
    VRep out;
    for (auto& point : BasisSearch(h).run())
        out.vertices.push_back({Generator{}, Distribution(std::move(point))});
    return out;
}

std::size_t tight_rank(const HRep& h, std::span<const Rational> p) {
    std::vector<RationalVector> rows{RationalVector(h.dimension, Rational(1))};
    for (const auto& ineq : h.inequalities)
        if (sgn(ineq.evaluate(p)) == 0) rows.push_back(ineq.coefficients);
    return rank(RatMatrix::from_rows(rows));
}

std::ptrdiff_t incidence_rank(const VRep& v, const Inequality& ineq) {
    std::vector<RationalVector> tight;
    for (const auto& vertex : v.vertices)
        if (sgn(ineq.evaluate(vertex.point.values())) == 0) tight.push_back(vertex.point.values());
    if (tight.empty()) return -1;
    return static_cast<std::ptrdiff_t>(affine_rank(tight));
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

SimplexSampler::SimplexSampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed), scratch_(n) {
    if (n == 0) throw InvalidInput("sampling from an empty simplex");
}

std::vector<double> SimplexSampler::next() {
    double total = 0;
    for (auto& e : scratch_) {
        e = -std::log(rng_.next_open01());
        total += e;
    }
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = scratch_[i] / total;
    return out;
}

void SimplexSampler::next_fixed(std::span<std::int64_t> out) {
    if (out.size() != n_) throw DimensionMismatch("fixed-point buffer length mismatch");
    std::vector<double> p = next();
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = static_cast<std::int64_t>(std::floor(std::ldexp(p[i], kernels::kFixedPointBits)));
}

std::vector<double> sample_simplex(std::size_t n, std::uint64_t seed) { return SimplexSampler(n, seed).next(); }

Distribution from_fixed_point(std::span<const std::int64_t> masses) {
    RationalVector weights;
    weights.reserve(masses.size());
    for (auto m : masses) weights.emplace_back(static_cast<long>(m));
    return Distribution::normalized(std::move(weights));
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0) throw InvalidInput("Monte Carlo needs at least one trial");
    if (hits > trials) throw InvalidInput("more hits than trials");
    McEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.estimate = Rational(BigInt(std::to_string(hits)), BigInt(std::to_string(trials)));
    e.estimate.canonicalize();
    const Rational variance = e.estimate * (1 - e.estimate) / Rational(BigInt(std::to_string(trials)));
    e.stderr_value = std::sqrt(variance.get_d());

    const BigInt scale = BigInt(1) << 32;
    BigInt numerator(std::ceil(std::ldexp(e.stderr_value, 32)));
    Rational bound(numerator, scale);
    while (bound * bound < variance) bound += Rational(BigInt(1), scale);
    bound.canonicalize();
    e.stderr_bound = bound;
    return e;
}

bool McEstimate::within(const Rational& exact, unsigned k) const {
    return abs(estimate - exact) <= Rational(k) * stderr_bound;
}

McEstimate montecarlo_volume(const std::function<bool(const Distribution&)>& predicate, std::size_t n,
                             std::uint64_t trials, std::uint64_t seed) {
    std::uint64_t hits = 0;
    std::vector<std::int64_t> sample(n);
    for (std::uint64_t chunk = 0, done = 0; done < trials; ++chunk) {
        SimplexSampler sampler(n, derive_seed(seed, chunk));
        const std::uint64_t count = std::min<std::uint64_t>(kMcChunk, trials - done);
        for (std::uint64_t s = 0; s < count; ++s) {
            sampler.next_fixed(sample);
            if (predicate(from_fixed_point(sample))) ++hits;
        }
        done += count;
    }
    return make_estimate(hits, trials);
}

McEstimate montecarlo_volume(const HRep& h, std::uint64_t trials, std::uint64_t seed, unsigned workers,
                             kernels::Backend backend) {
    const kernels::UnitSystem system = kernels::UnitSystem::compile(h);
    const std::size_t n = h.dimension;
    const std::uint64_t chunks = (trials + kMcChunk - 1) / kMcChunk;
    workers = std::max(1U, workers);

    std::atomic<std::uint64_t> hits{0};
    auto work = [&](unsigned worker) {
        kernels::FixedPointBatch batch(n, kMcChunk);
        std::vector<std::int64_t> sample(n);
        std::uint64_t local = 0;
        for (std::uint64_t chunk = worker; chunk < chunks; chunk += workers) {
            SimplexSampler sampler(n, derive_seed(seed, chunk));
            const std::uint64_t count = std::min<std::uint64_t>(kMcChunk, trials - chunk * kMcChunk);
            for (std::uint64_t s = 0; s < count; ++s) {
                sampler.next_fixed(sample);
                for (std::size_t i = 0; i < n; ++i) batch.column(i)[s] = sample[i];
            }
            batch.set_count(count);
            local += kernels::count_members(backend, system, batch);
        }
        hits += local;
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    return make_estimate(hits.load(), trials);
}

// ---------------------------------------------------------------------------
// Mixtures
// ---------------------------------------------------------------------------

MixtureReport mixture_strong_mode_test(const Graph& g, unsigned k, std::uint64_t trials, std::uint64_t seed,
                                       unsigned retry_budget) {
    if (k < 1) throw InvalidInput("mixture needs at least one component");
    const std::size_t n = g.size();
    MixtureReport report;
    report.trials = trials;
    std::vector<std::int64_t> sample(n);

    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, t);
        SplitMix64 weight_rng(trial_seed);
        RationalVector mixture(n);
        for (unsigned j = 0; j < k; ++j) {
            SimplexSampler sampler(n, derive_seed(trial_seed, j));
            std::optional<Distribution> component;
            for (unsigned attempt = 0; attempt < retry_budget && !component; ++attempt) {
                sampler.next_fixed(sample);
                Distribution candidate = from_fixed_point(sample);
                if (modes_of(candidate, g, Strictness::Strict).size() == 1)
                    component = std::move(candidate);
                else
                    ++report.rejected_components;
            }
            if (!component) throw BudgetExceeded("no unimodal component within the retry budget", retry_budget);
            const Rational weight(static_cast<unsigned long>(weight_rng.next_below(std::uint64_t{1} << 20) + 1));
            for (std::size_t i = 0; i < n; ++i) mixture[i] += weight * (*component)[i];
        }
        Distribution mixed = Distribution::normalized(std::move(mixture));
        const std::size_t strict_strong = strong_modes_of(mixed, g, Strictness::Strict).size();
        report.max_strict_strong_modes = std::max(report.max_strict_strong_modes, strict_strong);
        if (strict_strong > k) {
            ++report.violations;
            if (!report.counterexample) report.counterexample = std::move(mixed);
        }
    }
    return report;
}

} // namespace modepoly
