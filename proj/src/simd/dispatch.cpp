#include "lindeg/simd.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace lindeg::simd {
namespace {

Kernel probe() {
#if defined(LINDEG_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Kernel::Avx2;
#endif
  return Kernel::Scalar;
}

std::atomic<Kernel>& active_slot() {
  static std::atomic<Kernel> slot{detected_kernel()};
  return slot;
}

}  // namespace

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Scalar:
      return "scalar";
    case Kernel::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::Scalar:
      return true;
    case Kernel::Avx2:
      return detected_kernel() == Kernel::Avx2;
  }
  return false;
}

Kernel detected_kernel() {
  static const Kernel k = probe();
  return k;
}

Kernel active_kernel() { return active_slot().load(std::memory_order_relaxed); }

void set_active_kernel(Kernel k) {
  if (!kernel_available(k)) {
    throw std::invalid_argument("kernel not available on this CPU/build: " +
                                std::string(kernel_name(k)));
  }
  active_slot().store(k, std::memory_order_relaxed);
}

bool convolution_fits_i64(std::int64_t max_a, std::int64_t max_b, std::size_t terms) {
  if (max_a < 0 || max_b < 0) return false;
  if (max_a > kMaxOperandMagnitude || max_b > kMaxOperandMagnitude) return false;
  // Both operands are below 2^31, so the pairwise product fits in 64 bits.
  // Partial sums are bounded by the full sum, so the accumulator cannot
  // overflow mid-loop either.
  const auto pair = static_cast<std::uint64_t>(max_a) * static_cast<std::uint64_t>(max_b);
  if (pair == 0) return true;
  return terms <= static_cast<std::uint64_t>(INT64_MAX) / pair;
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
#if defined(LINDEG_HAVE_AVX2_KERNEL)
  if (active_kernel() == Kernel::Avx2) {
    convolve_avx2(a, b, out);
    return;
  }
#endif
  convolve_scalar(a, b, out);
}

}  // namespace lindeg::simd
