#pragma once

// Batch evaluation of homogeneous inequalities with coefficients in {-1, 0, 1}
// on fixed-point samples. Every mode, strong-mode and positivity inequality has
// this shape, so Monte Carlo membership reduces to 64-bit integer adds and sign
// tests that vectorize across samples.

#include "modepoly/polytope.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace modepoly::kernels {

// Fractional bits of the fixed-point sample representation.
inline constexpr int kFixedPointBits = 53;

// Inequality k reads terms [offsets[k], offsets[k+1]); each term is a node
// index with a sign.
struct UnitSystem {
    std::size_t dimension = 0;
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint32_t> nodes;
    std::vector<std::int8_t> signs;

    std::size_t size() const noexcept { return offsets.size() - 1; }

    // Throws InvalidInput when a coefficient is not -1, 0 or 1, or when the
    // number of terms could overflow 64-bit accumulation.
    static UnitSystem compile(const HRep& h);
};

// Structure-of-arrays batch: column(node)[s] is the fixed-point mass of node
// in sample s, an integer in [0, 2^53].
class FixedPointBatch {
public:
    FixedPointBatch(std::size_t dimension, std::size_t capacity);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t count() const noexcept { return count_; }
    void set_count(std::size_t count);

    std::int64_t* column(std::size_t node) noexcept { return data_.data() + node * capacity_; }
    const std::int64_t* column(std::size_t node) const noexcept { return data_.data() + node * capacity_; }

private:
    std::size_t dimension_;
    std::size_t capacity_;
    std::size_t count_ = 0;
    std::vector<std::int64_t> data_;
};

enum class Backend { Scalar, Avx2, Neon };

std::string_view name(Backend b);

// Backends compiled in and supported by the running CPU; Scalar is always first.
std::span<const Backend> available_backends();

// Widest available backend, unless MODEPOLY_KERNEL names another available one.
Backend default_backend();

// out[s] = 1 iff sample s satisfies every inequality, else 0.
// out must hold batch.count() entries. Throws InvalidInput for an unavailable
// backend or a dimension mismatch.
void evaluate(Backend backend, const UnitSystem& system, const FixedPointBatch& batch,
              std::span<std::uint8_t> out);

// Number of member samples.
std::size_t count_members(Backend backend, const UnitSystem& system, const FixedPointBatch& batch);

namespace detail {
void evaluate_scalar(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out);
void evaluate_avx2(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out);
void evaluate_neon(const UnitSystem& system, const FixedPointBatch& batch, std::uint8_t* out);
} // namespace detail

} // namespace modepoly::kernels
