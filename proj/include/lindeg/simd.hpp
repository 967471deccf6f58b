#pragma once

// Dense integer convolution kernels backing LaurentPoly multiplication.
//
// The fast path of LaurentPoly::operator* densifies both operands into
// int64 arrays whose entries fit in int32 and whose convolution cannot
// overflow int64 (see convolution_fits_i64). Every variant must produce
// bit-identical output to the scalar reference.

#include <cstdint>
#include <span>
#include <string_view>

namespace lindeg::simd {

enum class Kernel {
  Scalar,
  Avx2,
};

std::string_view kernel_name(Kernel k);

/// True when `k` is compiled in and supported by the running CPU.
bool kernel_available(Kernel k);

/// Best available kernel for this process; probed once.
Kernel detected_kernel();

/// Kernel used by convolve(). Defaults to detected_kernel().
Kernel active_kernel();

/// Overrides the active kernel (tests, benchmarks). Throws std::invalid_argument
/// if the kernel is unavailable.
void set_active_kernel(Kernel k);

/// Largest |entry| a dense operand may hold on the fast path.
inline constexpr std::int64_t kMaxOperandMagnitude = (std::int64_t{1} << 31) - 1;

/// True when convolving operands bounded by `max_a`, `max_b` in magnitude
/// with `terms` overlapping products per output slot stays inside int64.
bool convolution_fits_i64(std::int64_t max_a, std::int64_t max_b, std::size_t terms);

// out[i + j] += a[i] * b[j]; out.size() must be a.size() + b.size() - 1 and
// zero-initialised by the caller. Operands must satisfy the fast-path bounds.
void convolve_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                     std::span<std::int64_t> out);

#if defined(LINDEG_HAVE_AVX2_KERNEL)
void convolve_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                   std::span<std::int64_t> out);
#endif

/// Dispatches to the active kernel.
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);

}  // namespace lindeg::simd
