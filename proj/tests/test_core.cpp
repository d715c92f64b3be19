#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "chores/instance.hpp"
#include "chores/kernels.hpp"
#include "chores/rational.hpp"

using namespace chores;

TEST(Rational, FormatsFractionsAndValues) {
  EXPECT_EQ(format_fraction(make_rational(6, 4)), "3/2");
  EXPECT_EQ(format_fraction(Rational(2)), "2/1");
  EXPECT_EQ(format_value(Rational(2)), "2");
  EXPECT_EQ(format_value(make_rational(-1, 3)), "-1/3");
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
  EXPECT_EQ(parse_rational("1.25"), make_rational(5, 4));
  EXPECT_EQ(parse_rational("-2/3"), make_rational(-2, 3));
  for (const char* bad : {"", "x", "1/0", "1.", "1/2/3", "--1", " 1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, CeilAndFloor) {
  EXPECT_EQ(ceil(make_rational(7, 2)), 4);
  EXPECT_EQ(floor(make_rational(7, 2)), 3);
  EXPECT_EQ(ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(5)), 5);
}

namespace {

ChoreInstance small_bins() {
  ChoreInstance inst;
  inst.n = 2;
  inst.m = 3;
  inst.sizes = {{5, 3, 1}, {2, 4, 4}};
  inst.spec = BinPackingSpec{{5, 6}};
  return inst;
}

}  // namespace

TEST(Instance, ValidatesShapesAndCapacities) {
  ChoreInstance inst = small_bins();
  EXPECT_FALSE(validate_instance(inst));

  auto broken = inst;
  broken.sizes[0][0] = 6;
  EXPECT_EQ(validate_instance(broken), "capacity below max item size");

  broken = inst;
  broken.sizes[1].pop_back();
  EXPECT_TRUE(validate_instance(broken));

  broken = inst;
  broken.sizes[0][1] = -1;
  EXPECT_TRUE(validate_instance(broken));
  EXPECT_THROW(require_valid(broken), InvalidInstance);

  broken = inst;
  broken.n = 0;
  broken.sizes.clear();
  EXPECT_TRUE(validate_instance(broken));
}

TEST(Instance, ValidatesSpeedsAndPoints) {
  ChoreInstance job;
  job.n = 1;
  job.m = 2;
  job.sizes = {{1, 2}};
  job.spec = JobSchedulingSpec{{{2, 3}}};
  EXPECT_EQ(validate_instance(job), "speeds must be nonincreasing");
  job.spec = JobSchedulingSpec{{{}}};
  EXPECT_TRUE(validate_instance(job));
  job.spec = JobSchedulingSpec{{{3, 0}}};
  EXPECT_TRUE(validate_instance(job));

  ChoreInstance plane;
  plane.n = 2;
  plane.m = 3;
  plane.spec = CoveringPlaneSpec{2, {{1, 1}, {1, 2}, {2, 1}}};
  EXPECT_EQ(validate_instance(plane), "point count differs from n^n");
  plane.m = 4;
  plane.spec = CoveringPlaneSpec{2, {{1, 1}, {1, 2}, {2, 1}, {1, 1}}};
  EXPECT_EQ(validate_instance(plane), "duplicate point");
  plane.spec = CoveringPlaneSpec{2, {{1, 1}, {1, 2}, {2, 1}, {2, 3}}};
  EXPECT_TRUE(validate_instance(plane));
}

TEST(Instance, ZeroItemsAreValid) {
  ChoreInstance inst;
  inst.n = 2;
  inst.m = 0;
  inst.sizes = {{}, {}};
  inst.spec = BinPackingSpec{{1, 1}};
  EXPECT_FALSE(validate_instance(inst));
}

TEST(Instance, IdenticalOrdering) {
  ChoreInstance inst = small_bins();
  EXPECT_FALSE(is_ido(inst));
  inst.sizes[1] = {4, 4, 2};
  EXPECT_TRUE(is_ido(inst));
  ChoreInstance plane;
  plane.n = 2;
  plane.m = 4;
  plane.spec = CoveringPlaneSpec{2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
  EXPECT_THROW(is_ido(plane), InvalidInstance);
}

TEST(Instance, PartitionCheck) {
  EXPECT_FALSE(check_partition({{{0, 2}, {1}}}, 2, 3));
  EXPECT_FALSE(check_partition({{{}, {0, 1, 2}}}, 2, 3));
  EXPECT_EQ(check_partition({{{0, 1}, {1, 2}}}, 2, 3), "item 2 allocated twice");
  EXPECT_EQ(check_partition({{{0}, {1}}}, 2, 3), "item 3 unallocated");
  EXPECT_EQ(check_partition({{{0, 3}, {1, 2}}}, 2, 3), "item index 4 out of range");
  EXPECT_TRUE(check_partition({{{0, 1, 2}}}, 2, 3));
  EXPECT_THROW(require_partition({{{0}}}, 2, 3), InvalidAllocation);
}

TEST(Instance, TotalSize) {
  ChoreInstance inst = small_bins();
  EXPECT_EQ(inst.total_size(0), 9);
  EXPECT_EQ(inst.total_size(1, {1, 2}), 8);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> naive_subset_sums(const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> out(std::size_t{1} << w.size());
  for (std::size_t mask = 0; mask < out.size(); ++mask)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (mask >> j & 1) out[mask] += w[j];
  return out;
}

std::vector<simd::Isa> available_isas() {
  std::vector<simd::Isa> isas;
  for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2, simd::Isa::Neon})
    if (simd::isa_available(isa)) isas.push_back(isa);
  return isas;
}

}  // namespace

TEST(Kernels, ScalarSubsetSumsMatchNaive) {
  std::mt19937_64 rng(11);
  for (int k = 0; k <= 12; ++k) {
    std::vector<std::int64_t> w(k);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % 1000);
    std::vector<std::int64_t> out(std::size_t{1} << k);
    simd::scalar::subset_sums(w, out);
    EXPECT_EQ(out, naive_subset_sums(w)) << "k=" << k;
  }
}

TEST(Kernels, VectorVariantsMatchScalar) {
  std::mt19937_64 rng(12);
  for (auto isa : available_isas()) {
    for (int trial = 0; trial < 50; ++trial) {
      const int k = static_cast<int>(rng() % 17);
      std::vector<std::int64_t> w(k);
      for (auto& x : w) x = static_cast<std::int64_t>(rng() % 2000000) - 1000000;
      std::vector<std::int64_t> ref(std::size_t{1} << k), got(ref.size());
      simd::subset_sums(w, ref, simd::Isa::Scalar);
      simd::subset_sums(w, got, isa);
      ASSERT_EQ(got, ref) << simd::isa_name(isa) << " k=" << k;

      const std::int64_t bound = static_cast<std::int64_t>(rng() % 2000000) - 1000000;
      std::vector<std::uint8_t> mark_ref(ref.size()), mark_got(ref.size());
      const auto n_ref = simd::mark_at_most(ref, bound, mark_ref, simd::Isa::Scalar);
      const auto n_got = simd::mark_at_most(ref, bound, mark_got, isa);
      ASSERT_EQ(mark_got, mark_ref) << simd::isa_name(isa);
      ASSERT_EQ(n_got, n_ref);
    }
  }
}

TEST(Kernels, MarkHandlesRaggedLengths) {
  for (auto isa : available_isas()) {
    for (std::size_t len = 0; len < 13; ++len) {
      std::vector<std::int64_t> v(len);
      for (std::size_t k = 0; k < len; ++k) v[k] = static_cast<std::int64_t>(k) - 4;
      std::vector<std::uint8_t> out(len, 7);
      EXPECT_EQ(simd::mark_at_most(v, 0, out, isa), std::min<std::size_t>(len, 5));
      for (std::size_t k = 0; k < len; ++k) EXPECT_EQ(out[k], v[k] <= 0 ? 1 : 0);
    }
  }
}

TEST(Kernels, DispatchHonoursScalarOverride) {
  EXPECT_TRUE(simd::isa_available(simd::Isa::Scalar));
  EXPECT_TRUE(simd::isa_available(simd::detect_isa()));
  const char* env = std::getenv("CHORES_SIMD");
  if (env != nullptr && std::string(env) == "scalar")
    EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
  else
    EXPECT_EQ(simd::active_isa(), simd::detect_isa());
}

TEST(Kernels, RejectsBadShapes) {
  std::vector<std::int64_t> w(3), out(4);
  EXPECT_THROW(simd::subset_sums(w, out), std::invalid_argument);
}
