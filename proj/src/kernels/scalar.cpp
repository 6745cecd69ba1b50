#include "modepoly/kernels/unit_system.hpp"

namespace modepoly::kernels::detail {

// Reference kernel: one sample at a time, stop at the first violated row.
void evaluate_scalar(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out) {
    const std::size_t rows = system.size();
    for (std::size_t s = 0; s < batch.count(); ++s) {
        std::uint8_t member = 1;
        for (std::size_t k = 0; k < rows && member; ++k) {
            std::int64_t acc = 0;
            for (std::uint32_t t = system.offsets[k]; t < system.offsets[k + 1]; ++t) {
                const std::int64_t v = batch.column(system.nodes[t])[s];
                acc += system.signs[t] > 0 ? v : -v;
            }
            if (acc < 0) member = 0;
        }
        out[s] = member;
    }
}

} // namespace modepoly::kernels::detail
