#include <immintrin.h>

#include "chores/kernels.hpp"

namespace chores::simd::avx2 {

void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out) {
  out[0] = 0;
  std::size_t block = 1;
  for (std::int64_t w : weights) {
    std::size_t mask = 0;
    if (block >= 4) {
      const __m256i add = _mm256_set1_epi64x(w);
      for (; mask + 4 <= block; mask += 4) {
        __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&out[mask]));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(&out[block + mask]),
                            _mm256_add_epi64(lo, add));
      }
    }
    for (; mask < block; ++mask) out[block + mask] = out[mask] + w;
    block <<= 1;
  }
}

std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out) {
  const __m256i limit = _mm256_set1_epi64x(bound);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 4 <= values.size(); k += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&values[k]));
    // v <= bound  <=>  !(v > bound)
    const int over = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(v, limit)));
    for (int lane = 0; lane < 4; ++lane) {
      const std::uint8_t fits = ((over >> lane) & 1) ? 0 : 1;
      out[k + lane] = fits;
      count += fits;
    }
  }
  for (; k < values.size(); ++k) {
    out[k] = values[k] <= bound ? 1 : 0;
    count += out[k];
  }
  return count;
}

}  // namespace chores::simd::avx2
