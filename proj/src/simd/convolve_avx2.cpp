// Compiled with -mavx2; only reached after a runtime CPU check.
#include "lindeg/simd.hpp"

#include <immintrin.h>

#include <cassert>

namespace lindeg::simd {

void convolve_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                   std::span<std::int64_t> out) {
  assert(!a.empty() && !b.empty());
  assert(out.size() == a.size() + b.size() - 1);
  const std::size_t nb = b.size();
  const std::size_t nb4 = nb & ~std::size_t{3};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    // _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each lane,
    // exact because both operands fit in int32.
    const __m256i va = _mm256_set1_epi64x(ai);
    std::int64_t* dst = out.data() + i;
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), acc);
    }
    for (; j < nb; ++j) dst[j] += ai * b[j];
  }
}

}  // namespace lindeg::simd
