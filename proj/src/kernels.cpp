#include "chores/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace chores::simd {

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define CHORES_HAVE_AVX2_TU 1
#else
#define CHORES_HAVE_AVX2_TU 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define CHORES_HAVE_NEON_TU 1
#else
#define CHORES_HAVE_NEON_TU 0
#endif

#if !CHORES_HAVE_AVX2_TU
namespace avx2 {
void subset_sums(std::span<const std::int64_t>, std::span<std::int64_t>) {
  throw std::logic_error("AVX2 kernels not built for this target");
}
std::size_t mark_at_most(std::span<const std::int64_t>, std::int64_t, std::span<std::uint8_t>) {
  throw std::logic_error("AVX2 kernels not built for this target");
}
}  // namespace avx2
#endif

#if !CHORES_HAVE_NEON_TU
namespace neon {
void subset_sums(std::span<const std::int64_t>, std::span<std::int64_t>) {
  throw std::logic_error("NEON kernels not built for this target");
}
std::size_t mark_at_most(std::span<const std::int64_t>, std::int64_t, std::span<std::uint8_t>) {
  throw std::logic_error("NEON kernels not built for this target");
}
}  // namespace neon
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if CHORES_HAVE_AVX2_TU
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon: return CHORES_HAVE_NEON_TU;
  }
  return false;
}

Isa detect_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("CHORES_SIMD");
    if (env != nullptr && std::string(env) == "scalar") return Isa::Scalar;
    return detect_isa();
  }();
  return isa;
}

void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out, Isa isa) {
  if (weights.size() > 30) throw std::invalid_argument("subset_sums: too many weights");
  if (out.size() != (std::size_t{1} << weights.size()))
    throw std::invalid_argument("subset_sums: output size must be 2^k");
  switch (isa) {
    case Isa::Avx2: return avx2::subset_sums(weights, out);
    case Isa::Neon: return neon::subset_sums(weights, out);
    case Isa::Scalar: return scalar::subset_sums(weights, out);
  }
}

void subset_sums(std::span<const std::int64_t> weights, std::span<std::int64_t> out) {
  subset_sums(weights, out, active_isa());
}

std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> weights) {
  if (weights.size() > 30) throw std::invalid_argument("subset_sums: too many weights");
  std::vector<std::int64_t> out(std::size_t{1} << weights.size());
  subset_sums(weights, out);
  return out;
}

std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out, Isa isa) {
  if (out.size() < values.size()) throw std::invalid_argument("mark_at_most: output too small");
  switch (isa) {
    case Isa::Avx2: return avx2::mark_at_most(values, bound, out);
    case Isa::Neon: return neon::mark_at_most(values, bound, out);
    case Isa::Scalar: return scalar::mark_at_most(values, bound, out);
  }
  return 0;
}

std::size_t mark_at_most(std::span<const std::int64_t> values, std::int64_t bound,
                         std::span<std::uint8_t> out) {
  return mark_at_most(values, bound, out, active_isa());
}

}  // namespace chores::simd
