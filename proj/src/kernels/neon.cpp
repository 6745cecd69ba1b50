#include "modepoly/kernels/unit_system.hpp"

#include "modepoly/error.hpp"

#if defined(MODEPOLY_HAVE_NEON) && defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace modepoly::kernels::detail {

#if defined(MODEPOLY_HAVE_NEON) && defined(__aarch64__)

// Two samples per 128-bit register.
void evaluate_neon(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out) {
    const std::size_t rows = system.size();
    const std::size_t count = batch.count();
    const std::size_t full = count - count % 2;

    for (std::size_t s = 0; s < full; s += 2) {
        uint64x2_t violated = vdupq_n_u64(0);
        for (std::size_t k = 0; k < rows; ++k) {
            int64x2_t acc = vdupq_n_s64(0);
            for (std::uint32_t t = system.offsets[k]; t < system.offsets[k + 1]; ++t) {
                const int64x2_t v = vld1q_s64(batch.column(system.nodes[t]) + s);
                acc = system.signs[t] > 0 ? vaddq_s64(acc, v) : vsubq_s64(acc, v);
            }
            violated = vorrq_u64(violated, vcltzq_s64(acc));
        }
        out[s] = vgetq_lane_u64(violated, 0) ? 0 : 1;
        out[s + 1] = vgetq_lane_u64(violated, 1) ? 0 : 1;
    }

    if (full < count) {
        FixedPointBatch tail(batch.dimension(), 1);
        tail.set_count(1);
        for (std::size_t node = 0; node < batch.dimension(); ++node) tail.column(node)[0] = batch.column(node)[full];
        evaluate_scalar(system, tail, out + full);
    }
}

#else

void evaluate_neon(const UnitSystem&, const FixedPointBatch&, std::uint8_t*) {
    throw InvalidInput("NEON kernel not compiled in");
}

#endif

} // namespace modepoly::kernels::detail
