#include <arm_neon.h>

#include "chores/kernels.hpp"

namespace chores::simd::neon {

void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out) {
  out[0] = 0;
  std::size_t block = 1;
  for (std::int64_t w : weights) {
    std::size_t mask = 0;
    if (block >= 2) {
      const int64x2_t add = vdupq_n_s64(w);
      for (; mask + 2 <= block; mask += 2)
        vst1q_s64(&out[block + mask], vaddq_s64(vld1q_s64(&out[mask]), add));
    }
    for (; mask < block; ++mask) out[block + mask] = out[mask] + w;
    block <<= 1;
  }
}

std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out) {
  const int64x2_t limit = vdupq_n_s64(bound);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 2 <= values.size(); k += 2) {
    const uint64x2_t le = vcleq_s64(vld1q_s64(&values[k]), limit);
    for (int lane = 0; lane < 2; ++lane) {
      const std::uint8_t fits = (lane == 0 ? vgetq_lane_u64(le, 0) : vgetq_lane_u64(le, 1)) ? 1 : 0;
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

}  // namespace chores::simd::neon
