// One line per acceptance criterion; exit status is nonzero if any fails.

#include "support.hpp"

#include "modepoly/error.hpp"
#include "modepoly/linalg.hpp"
#include "modepoly/membership.hpp"
#include "modepoly/mode_polytope.hpp"
#include "modepoly/oracle.hpp"
#include "modepoly/poset.hpp"
#include "modepoly/strong_polytope.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace modepoly;
using support::q;
using support::Case;

namespace {

// Linear extensions of the even-parity poset on hypercube(4). Computed by the
// ideal DP, confirmed by the layered counter and by a separate script.
const char* const kHypercube4EvenParityExtensions = "3804143616";

struct Verdict {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "failed: " << what;
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = Clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(start));
    std::printf("[%s] %2d %s (%s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, timing, v.note.str().empty() ? "" : " ",
                v.note.str().c_str());
    std::fflush(stdout);
    failures += v.ok ? 0 : 1;
}

BigInt count_for(const Case& k) { return count_linear_extensions(poset_from_modes(k.graph, k.modes)); }

} // namespace

int main() {
    const Case square = support::square_case();
    const Case square_even = support::parity_case(2);
    const Case cube_even = support::parity_case(3);
    const Case cube_single = support::cube_case(3, {"000"});
    const Case q4_pair = support::cube_case(4, {"0000", "1110"});

    criterion(1, "extension counts 4 and 720", [&](Verdict& v) {
        const auto start = Clock::now();
        const BigInt a = count_for(square_even);
        const BigInt b = count_for(cube_even);
        const double t = seconds_since(start);
        v.require(a == 4, "square count " + a.get_str());
        v.require(b == 720, "cube count " + b.get_str());
        v.require(t < 1.0, "runtime " + std::to_string(t));
        v.note << "counts " << a.get_str() << ", " << b.get_str();
    });

    criterion(2, "volumes 1/6, 1/56, 1/9, 1/256", [&](Verdict& v) {
        const auto start = Clock::now();
        const Rational m2 = mode_volume_ratio(square.graph, square.modes);
        const Rational m3 = mode_volume_ratio(cube_even.graph, cube_even.modes);
        const Rational s2 = strong_volume_ratio(square_even.graph, square_even.modes);
        const Rational s3 = strong_volume_ratio(cube_even.graph, cube_even.modes);
        const double t = seconds_since(start);
        v.require(m2 == q(1, 6), "square mode volume " + to_string(m2));
        v.require(m3 == q(1, 56), "cube mode volume " + to_string(m3));
        v.require(s2 == q(1, 9), "square strong volume " + to_string(s2));
        v.require(s3 == q(1, 256), "cube strong volume " + to_string(s3));
        v.require(strong_volume_det(square_even.graph, square_even.modes) == s2, "square determinant");
        v.require(strong_volume_det(cube_even.graph, cube_even.modes) == s3, "cube determinant");
        v.require(t < 1.0, "runtime " + std::to_string(t));
    });

    criterion(3, "vertex counts 5/4, 12/8, 19/8 with brute-force set equality", [&](Verdict& v) {
        const std::vector<std::tuple<const Case*, std::size_t, std::size_t>> table{
            {&square, 5, 4}, {&cube_single, 12, 8}, {&cube_even, 19, 8}};
        for (const auto& [k, mode_count, strong_count] : table) {
            const VRep mv = mode_vertices(k->graph, k->modes);
            const VRep sv = strong_vrep(k->graph, k->modes);
            v.require(mv.size() == mode_count, "mode vertex count " + std::to_string(mv.size()));
            v.require(sv.size() == strong_count, "strong vertex count " + std::to_string(sv.size()));
            v.require(same_point_set(mv, naive_vertex_enum(mode_hrep(k->graph, k->modes))), "mode vertex set");
            v.require(same_point_set(sv, naive_vertex_enum(strong_hrep(k->graph, k->modes))), "strong vertex set");
        }
    });

    criterion(4, "hypercube(4) with modes 0000,1110: 38 and 16 vertices, volume 2^-8", [&](Verdict& v) {
        const VRep mv = mode_vertices(q4_pair.graph, q4_pair.modes);
        const VRep sv = strong_vrep(q4_pair.graph, q4_pair.modes);
        v.require(mv.size() == 2 * 15 + 16 - 8, "mode vertex count " + std::to_string(mv.size()));
        v.require(sv.size() == 16, "strong vertex count " + std::to_string(sv.size()));
        const Rational formula = strong_volume_ratio(q4_pair.graph, q4_pair.modes);
        v.require(formula == q(1, 256), "volume " + to_string(formula));
        v.require(strong_volume_det(q4_pair.graph, q4_pair.modes) == formula, "determinant");
        const HRep h = mode_hrep(q4_pair.graph, q4_pair.modes);
        for (const auto& vx : mv.vertices) v.require(tight_rank(h, vx.point.values()) == 16, "vertex certificate");
    });

    criterion(5, "strong volume formula equals determinant on 60 random instances", [&](Verdict& v) {
        SplitMix64 rng(5005);
        for (int t = 0; t < 60; ++t) {
            const Case k = support::random_case(rng, 1, 12);
            v.require(strong_volume_det(k.graph, k.modes) == strong_volume_ratio(k.graph, k.modes),
                      "instance " + std::to_string(t));
        }
    });

    criterion(6, "DP equals naive count on 150 random posets, lower bound tight on K22 and K23", [&](Verdict& v) {
        SplitMix64 rng(6006);
        for (int t = 0; t < 150; ++t) {
            const Poset p = support::random_poset(rng, 1 + rng.next_below(9), static_cast<unsigned>(rng.next_below(600)));
            v.require(count_linear_extensions(p) == count_linear_extensions_naive(p), "poset " + std::to_string(t));
        }
        for (int t = 0; t < 150; ++t) {
            const Case k = support::random_case(rng, 1, 9);
            v.require(count_for(k) >= extension_lower_bound(k.graph, k.modes), "lower bound exceeded");
        }
        for (std::size_t right : {2, 3}) {
            const Graph g = generate_complete_bipartite(2, right);
            const ModeSet c(g, {0, 1});
            v.require(count_for({g, c}) == extension_lower_bound(g, c), "K2," + std::to_string(right));
        }
    });

    criterion(7, "hypercube(4) even parity extension count", [&](Verdict& v) {
        const auto start = Clock::now();
        const Poset p = poset_from_modes(support::parity_case(4).graph, support::parity_case(4).modes);
        const BigInt dp = count_linear_extensions(p);
        const double t = seconds_since(start);
        const BigInt layered = count_linear_extensions_layered(p);
        const BigInt bound = factorial(8) * factorial(8);
        v.require(dp == layered, "layered counter " + layered.get_str());
        v.require(dp >= bound, "below 8!8!");
        v.require(dp == BigInt(kHypercube4EvenParityExtensions), "reference value");
        v.require(t < 600, "runtime");
        v.note << "count " << dp.get_str();
    });

    criterion(8, "Monte Carlo with 10^6 samples within 4 standard errors", [&](Verdict& v) {
        const std::uint64_t trials = 1000000;
        const std::vector<std::pair<HRep, Rational>> runs{
            {mode_hrep(square.graph, square.modes), q(1, 6)},
            {mode_hrep(cube_even.graph, cube_even.modes), q(1, 56)},
            {strong_hrep(square_even.graph, square_even.modes), q(1, 9)},
            {strong_hrep(cube_even.graph, cube_even.modes), q(1, 256)}};
        for (const auto& [h, exact] : runs) {
            const McEstimate e = montecarlo_volume(h, trials, 20240601);
            v.require(e.within(exact, 4), "estimate for " + to_string(exact));
            const double z = (e.estimate_value() - exact.get_d()) / e.stderr_value;
            char buf[48];
            std::snprintf(buf, sizeof buf, "%sz=%.2f", v.note.str().empty() ? "" : " ", z);
            v.note << buf;
        }
        v.note << " [" << name(kernels::default_backend()) << "]";
    });

    criterion(9, "triangulation of the square polytope on 1000 points", [&](Verdict& v) {
        const Poset order = poset_from_modes(square.graph, square.modes);
        const auto extensions = enumerate_extensions(order);
        const std::set<std::vector<std::size_t>> known(extensions.begin(), extensions.end());
        v.require(known.size() == 4, "extension count");
        const HRep h = mode_hrep(square.graph, square.modes);
        SimplexSampler sampler(4, 909);
        std::vector<std::int64_t> raw(4);
        std::vector<int> hits(4, 0);
        int accepted = 0;
        while (accepted < 1000) {
            sampler.next_fixed(raw);
            const Distribution p = from_fixed_point(raw);
            if (!h.contains(p.values())) continue;
            ++accepted;
            const auto located = locate_simplex(p, square.graph, square.modes);
            v.require(known.count(located) == 1, "unknown simplex");
            for (std::size_t i = 1; i < 4; ++i) v.require(p[located[i - 1]] <= p[located[i]], "not ascending");
            // Points with distinct coordinates lie in exactly one simplex interior.
            std::set<Rational> distinct(p.values().begin(), p.values().end());
            if (distinct.size() < 4) continue;
            int containing = 0;
            for (std::size_t e = 0; e < extensions.size(); ++e) {
                bool ascending = true;
                for (std::size_t i = 1; i < 4; ++i) ascending = ascending && p[extensions[e][i - 1]] < p[extensions[e][i]];
                if (ascending) {
                    ++containing;
                    ++hits[e];
                    v.require(extensions[e] == located, "located simplex differs");
                }
            }
            v.require(containing == 1, "interiors overlap or miss");
        }
        v.note << "hits per simplex";
        for (int c : hits) v.note << ' ' << c;
    });

    criterion(10, "10^4 mixtures with k = 1, 2, 3 never exceed k strict strong modes", [&](Verdict& v) {
        const Graph g = generate_hypercube(3);
        for (unsigned k = 1; k <= 3; ++k) {
            const MixtureReport r = mixture_strong_mode_test(g, k, 10000, 1010 + k);
            v.require(r.violations == 0, "violations for k=" + std::to_string(k));
            v.note << (k == 1 ? "" : " ") << "k=" << k << " max " << r.max_strict_strong_modes;
        }
    });

    criterion(11, "decompositions recombine exactly on 200 members per polytope", [&](Verdict& v) {
        SplitMix64 rng(1111);
        for (const Case* k : {&square, &cube_even, &cube_single}) {
            const VRep mv = mode_vertices(k->graph, k->modes);
            const VRep sv = strong_vrep(k->graph, k->modes);
            for (int t = 0; t < 200; ++t) {
                const Distribution p = support::random_member(rng, mv);
                v.require(recombine(decompose_mode(p, k->graph, k->modes), p.size()) == p.values(), "mode");
                const Distribution q = support::random_member(rng, sv);
                v.require(recombine(decompose_strong(q, k->graph, k->modes), q.size()) == q.values(), "strong");
            }
        }
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
