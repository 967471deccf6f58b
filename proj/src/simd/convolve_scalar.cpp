#include "lindeg/simd.hpp"

#include <cassert>

namespace lindeg::simd {

void convolve_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                     std::span<std::int64_t> out) {
  assert(!a.empty() && !b.empty());
  assert(out.size() == a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    std::int64_t* dst = out.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
  }
}

}  // namespace lindeg::simd
