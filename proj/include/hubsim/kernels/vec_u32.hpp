#pragma once

#include <cstddef>
#include <cstdint>

namespace hubsim::kernels {

/// acc[i] += src[i] with wrapping 32-bit arithmetic, for i in [0, n).
///
/// Dispatches at runtime to AVX2 (x86-64) or NEON (aarch64) when available,
/// otherwise to the scalar reference. All variants produce bit-identical
/// results; wrapping addition is exact in every lane width.
void add_wrap_u32(std::uint32_t* acc, const std::uint32_t* src, std::size_t n);

/// Scalar reference implementation, always available (used as the
/// equivalence oracle for the vector variants).
void add_wrap_u32_scalar(std::uint32_t* acc, const std::uint32_t* src, std::size_t n);

/// Force the scalar path regardless of CPU features (testing hook).
void set_force_scalar(bool force);

/// Name of the variant add_wrap_u32 currently dispatches to:
/// "avx2", "neon", or "scalar".
const char* active_impl();

} // namespace hubsim::kernels
