#include "modepoly/kernels/unit_system.hpp"

#include "modepoly/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace modepoly::kernels {

namespace {

// |sum of terms| <= kMaxTerms * 2^53 < 2^63.
constexpr std::size_t kMaxTerms = 1023;

} // namespace

UnitSystem UnitSystem::compile(const HRep& h) {
    UnitSystem sys;
    sys.dimension = h.dimension;
    for (const auto& ineq : h.inequalities) {
        if (ineq.coefficients.size() != h.dimension) throw DimensionMismatch("inequality length mismatch");
        std::size_t terms = 0;
        for (std::size_t i = 0; i < ineq.coefficients.size(); ++i) {
            const Rational& a = ineq.coefficients[i];
            if (sgn(a) == 0) continue;
            if (a != 1 && a != -1) throw InvalidInput("coefficient " + to_string(a) + " is not -1, 0 or 1");
            sys.nodes.push_back(static_cast<std::uint32_t>(i));
            sys.signs.push_back(static_cast<std::int8_t>(sgn(a)));
            ++terms;
        }
        if (terms > kMaxTerms) throw InvalidInput("inequality has too many terms for 64-bit accumulation");
        sys.offsets.push_back(static_cast<std::uint32_t>(sys.nodes.size()));
    }
    return sys;
}

FixedPointBatch::FixedPointBatch(std::size_t dimension, std::size_t capacity)
    : dimension_(dimension), capacity_(capacity), data_(dimension * capacity, 0) {}

void FixedPointBatch::set_count(std::size_t count) {
    if (count > capacity_) throw InvalidInput("batch count exceeds capacity");
    count_ = count;
}

std::string_view name(Backend b) {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "unknown";
}

namespace {

std::vector<Backend> detect() {
    std::vector<Backend> out{Backend::Scalar};
#if defined(MODEPOLY_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) out.push_back(Backend::Avx2);
#endif
#if defined(MODEPOLY_HAVE_NEON) && defined(__aarch64__)
    out.push_back(Backend::Neon);
#endif
    return out;
}

bool is_available(Backend b) {
    auto all = available_backends();
    return std::find(all.begin(), all.end(), b) != all.end();
}

} // namespace

std::span<const Backend> available_backends() {
    static const std::vector<Backend> backends = detect();
    return backends;
}

Backend default_backend() {
    auto all = available_backends();
    if (const char* forced = std::getenv("MODEPOLY_KERNEL")) {
        for (Backend b : all)
            if (name(b) == forced) return b;
    }
    return all.back();
}

void evaluate(Backend backend, const UnitSystem& system, const FixedPointBatch& batch,
              std::span<std::uint8_t> out) {
    if (system.dimension != batch.dimension()) throw DimensionMismatch("batch dimension mismatch");
    if (out.size() < batch.count()) throw InvalidInput("output buffer too small");
    if (!is_available(backend)) throw InvalidInput("kernel backend '" + std::string(name(backend)) + "' is unavailable");
    switch (backend) {
    case Backend::Scalar: detail::evaluate_scalar(system, batch, out.data()); break;
    case Backend::Avx2: detail::evaluate_avx2(system, batch, out.data()); break;
    case Backend::Neon: detail::evaluate_neon(system, batch, out.data()); break;
    }
}

std::size_t count_members(Backend backend, const UnitSystem& system, const FixedPointBatch& batch) {
    std::vector<std::uint8_t> flags(batch.count());
    evaluate(backend, system, batch, flags);
    std::size_t hits = 0;
    for (auto f : flags) hits += f;
    return hits;
}

} // namespace modepoly::kernels
