#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops over subset tables. Each kernel has a scalar
// reference and vector variants; the dispatching entry points pick the widest
// variant the running CPU supports.
namespace chores::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// Widest ISA supported by this CPU and build.
Isa detect_isa();

// detect_isa(), unless CHORES_SIMD=scalar is set in the environment.
Isa active_isa();

bool isa_available(Isa isa);

// out[mask] = sum of weights[j] over the set bits j of mask.
// out.size() must equal 2^weights.size(); weights.size() <= 30.
void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out, Isa isa);
void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out);
std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> weights);

// out[k] = values[k] <= bound ? 1 : 0. Returns the number of ones.
std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out, Isa isa);
std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out);

namespace scalar {
void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out);
std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out);
}  // namespace scalar

namespace avx2 {
void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out);
std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out);
}  // namespace avx2

namespace neon {
void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out);
std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out);
}  // namespace neon

}  // namespace chores::simd
