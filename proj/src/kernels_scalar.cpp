#include "chores/kernels.hpp"

namespace chores::simd::scalar {

void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out) {
  out[0] = 0;
  std::size_t block = 1;
  for (std::int64_t w : weights) {
    for (std::size_t mask = 0; mask < block; ++mask) out[block + mask] = out[mask] + w;
    block <<= 1;
  }
}

std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = values[k] <= bound ? 1 : 0;
    count += out[k];
  }
  return count;
}

}  // namespace chores::simd::scalar
