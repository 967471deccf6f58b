#include "lindeg/laurent.hpp"
#include "lindeg/simd.hpp"

#include <doctest.h>

#include <random>
#include <vector>

namespace simd = lindeg::simd;

namespace {

std::vector<std::int64_t> random_operand(std::mt19937_64& rng, std::size_t len, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = d(rng);
  return v;
}

// Textbook definition, written independently of both kernels.
std::vector<std::int64_t> naive(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < a.size(); ++i)
      if (k >= i && k - i < b.size()) out[k] += a[i] * b[k - i];
  return out;
}

struct KernelGuard {
  simd::Kernel saved = simd::active_kernel();
  ~KernelGuard() { simd::set_active_kernel(saved); }
};

}  // namespace

TEST_CASE("scalar kernel matches the definition") {
  std::mt19937_64 rng(1);
  for (std::size_t la = 1; la <= 9; ++la) {
    for (std::size_t lb = 1; lb <= 9; ++lb) {
      const auto a = random_operand(rng, la, 1000);
      const auto b = random_operand(rng, lb, 1000);
      std::vector<std::int64_t> out(la + lb - 1, 0);
      simd::convolve_scalar(a, b, out);
      CHECK(out == naive(a, b));
    }
  }
}

#if defined(LINDEG_HAVE_AVX2_KERNEL)
TEST_CASE("avx2 kernel is bit-identical to scalar") {
  if (!simd::kernel_available(simd::Kernel::Avx2)) {
    MESSAGE("AVX2 not supported by this CPU; skipping");
    return;
  }
  std::mt19937_64 rng(2);
  // Lengths straddle the 4-lane boundary; magnitudes reach the int32 bound.
  for (std::size_t la = 1; la <= 13; ++la) {
    for (std::size_t lb = 1; lb <= 37; ++lb) {
      for (std::int64_t bound : {std::int64_t{3}, std::int64_t{1} << 20, simd::kMaxOperandMagnitude}) {
        const std::size_t terms = std::min(la, lb);
        std::int64_t b_bound = bound;
        while (!simd::convolution_fits_i64(bound, b_bound, terms)) b_bound /= 2;
        const auto a = random_operand(rng, la, bound);
        const auto b = random_operand(rng, lb, b_bound);
        std::vector<std::int64_t> s(la + lb - 1, 0), v(la + lb - 1, 0);
        simd::convolve_scalar(a, b, s);
        simd::convolve_avx2(a, b, v);
        CHECK(s == v);
      }
    }
  }
}
#endif

TEST_CASE("overflow guard") {
  CHECK(simd::convolution_fits_i64(1000, 1000, 100));
  CHECK(simd::convolution_fits_i64(simd::kMaxOperandMagnitude, simd::kMaxOperandMagnitude, 1));
  CHECK(simd::convolution_fits_i64(simd::kMaxOperandMagnitude, simd::kMaxOperandMagnitude, 2));
  CHECK_FALSE(simd::convolution_fits_i64(simd::kMaxOperandMagnitude, simd::kMaxOperandMagnitude, 3));
  CHECK_FALSE(simd::convolution_fits_i64(simd::kMaxOperandMagnitude + 1, 1, 1));
  CHECK_FALSE(simd::convolution_fits_i64(-1, 1, 1));
}

TEST_CASE("dispatch") {
  KernelGuard guard;
  CHECK(simd::kernel_available(simd::Kernel::Scalar));
  CHECK(simd::kernel_available(simd::detected_kernel()));
  simd::set_active_kernel(simd::Kernel::Scalar);
  CHECK(simd::active_kernel() == simd::Kernel::Scalar);
  CHECK(simd::kernel_name(simd::Kernel::Avx2) == "avx2");
  if (!simd::kernel_available(simd::Kernel::Avx2)) {
    CHECK_THROWS_AS(simd::set_active_kernel(simd::Kernel::Avx2), std::invalid_argument);
  }
}

TEST_CASE("Laurent products agree across kernels") {
  KernelGuard guard;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> exp(-15, 15);
  std::uniform_int_distribution<long long> coeff(-50000, 50000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<lindeg::LaurentPoly::Term> ta, tb;
    for (int i = 0; i < 12; ++i) ta.emplace_back(exp(rng), lindeg::BigInt(coeff(rng)));
    for (int i = 0; i < 9; ++i) tb.emplace_back(exp(rng), lindeg::BigInt(coeff(rng)));
    const auto a = lindeg::LaurentPoly::from_terms(ta);
    const auto b = lindeg::LaurentPoly::from_terms(tb);
    const auto ref = lindeg::mul_bigint_reference(a, b);
    for (auto k : {simd::Kernel::Scalar, simd::Kernel::Avx2}) {
      if (!simd::kernel_available(k)) continue;
      simd::set_active_kernel(k);
      CHECK(a * b == ref);
    }
  }
}
