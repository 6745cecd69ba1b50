#include "modepoly/kernels/unit_system.hpp"

#include "modepoly/error.hpp"

#if defined(MODEPOLY_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace modepoly::kernels::detail {

#if defined(MODEPOLY_HAVE_AVX2)

// Four samples per lane group; a row is violated where the accumulated sum is
// negative. Tail samples fall back to the scalar kernel.
void evaluate_avx2(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out) {
    const std::size_t rows = system.size();
    const std::size_t count = batch.count();
    const std::size_t full = count - count % 4;
    const __m256i zero = _mm256_setzero_si256();

    for (std::size_t s = 0; s < full; s += 4) {
        __m256i violated = zero;
        for (std::size_t k = 0; k < rows; ++k) {
            __m256i acc = zero;
            for (std::uint32_t t = system.offsets[k]; t < system.offsets[k + 1]; ++t) {
                const auto* src = reinterpret_cast<const __m256i*>(batch.column(system.nodes[t]) + s);
                const __m256i v = _mm256_loadu_si256(src);
                acc = system.signs[t] > 0 ? _mm256_add_epi64(acc, v) : _mm256_sub_epi64(acc, v);
            }
            violated = _mm256_or_si256(violated, _mm256_cmpgt_epi64(zero, acc));
        }
        const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(violated));
        for (int lane = 0; lane < 4; ++lane) out[s + lane] = (bits >> lane & 1) ? 0 : 1;
    }

    if (full < count) {
        FixedPointBatch tail(batch.dimension(), count - full);
        tail.set_count(count - full);
        for (std::size_t node = 0; node < batch.dimension(); ++node)
            for (std::size_t s = full; s < count; ++s) tail.column(node)[s - full] = batch.column(node)[s];
        evaluate_scalar(system, tail, out + full);
    }
}

#else

void evaluate_avx2(const UnitSystem&, const FixedPointBatch&, std::uint8_t*) {
    throw InvalidInput("AVX2 kernel not compiled in");
}

#endif

} // namespace modepoly::kernels::detail
