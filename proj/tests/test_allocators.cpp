#include <gtest/gtest.h>

#include "chores/allocators.hpp"
#include "chores/generators.hpp"
#include "chores/ido.hpp"
#include "chores/mms.hpp"
#include "oracles.hpp"

using namespace chores;

namespace {

ChoreInstance ido_bins(std::mt19937_64& rng, int n, int m, Size cap) {
  return to_ido(oracle::bin_instance(rng, n, m, cap)).instance;
}

Rational ceil_three_halves(const Rational& mms) { return Rational(ceil(mms * 3 / 2)); }

}  // namespace

TEST(BagFill, TwoMmsAgainstBruteForce) {
  std::mt19937_64 rng(401);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const ChoreInstance inst = ido_bins(rng, n, 1 + static_cast<int>(rng() % 8), 50);
    const Allocation alloc = bag_fill_allocate(inst);
    ASSERT_FALSE(check_partition(alloc, inst.n, inst.m));
    for (int i = 0; i < n; ++i)
      ASSERT_LE(oracle::value(inst, i, alloc.bundles[i]), 2 * oracle::mms(inst, i))
          << "instance " << k << " agent " << i;
  }
}

TEST(BagFill, TraceRecordsOneRoundPerAgent) {
  std::mt19937_64 rng(402);
  const ChoreInstance inst = ido_bins(rng, 4, 10, 30);
  const BagFillTrace trace = bag_fill_trace(inst, SmallItemPick::Largest);
  ASSERT_EQ(trace.rounds.size(), 4u);
  EXPECT_EQ(trace.rounds.back().outcome, BagOutcome::Last);
  std::vector<int> recipients;
  for (const auto& r : trace.rounds) recipients.push_back(r.recipient);
  std::sort(recipients.begin(), recipients.end());
  EXPECT_EQ(recipients, (std::vector<int>{0, 1, 2, 3}));
}

TEST(BagFill, RejectsWrongInputs) {
  std::mt19937_64 rng(403);
  EXPECT_THROW(bag_fill_allocate(oracle::job_instance(rng, 2, 4, 2, 3, 5)), InvalidInstance);
  ChoreInstance inst;
  inst.n = 2;
  inst.m = 2;
  inst.sizes = {{1, 2}, {2, 1}};
  inst.spec = BinPackingSpec{{2, 2}};
  EXPECT_THROW(bag_fill_allocate(inst), InvalidInstance);
}

TEST(BagFill, SingleAgentTakesEverything) {
  ChoreInstance inst;
  inst.n = 1;
  inst.m = 3;
  inst.sizes = {{3, 2, 1}};
  inst.spec = BinPackingSpec{{3}};
  EXPECT_EQ(bag_fill_allocate(inst).bundles[0], (ItemSet{0, 1, 2}));
}

TEST(BagFillV2, PassablePackingWithinThreeHalves) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const ChoreInstance inst = ido_bins(rng, n, 1 + static_cast<int>(rng() % 8), 50);
    const Allocation alloc = bag_fill_allocate_v2(inst);
    ASSERT_FALSE(check_partition(alloc, inst.n, inst.m));
    for (int i = 0; i < n; ++i) {
      const PassablePacking p = passable_set_packing(inst, i, alloc.bundles[i]);
      const Rational bins = certificate_value(inst, i, alloc.bundles[i], p.certificate);
      ASSERT_LE(bins, ceil_three_halves(oracle::mms(inst, i))) << "instance " << k;
    }
  }
}

TEST(BagFillV2, DoubledTightInstance) {
  const ChoreInstance tight = gen_tight_binpacking();
  ChoreInstance doubled = tight;
  doubled.m = 18;
  for (auto& row : doubled.sizes) row.insert(row.end(), row.begin(), row.end());
  const ChoreInstance ido = to_ido(doubled).instance;
  const Allocation alloc = bag_fill_allocate_v2(ido);
  OracleBudget wide;
  wide.max_items = wide.mms_max_items = 18;
  for (int i = 0; i < 3; ++i) {
    const Rational mms = mms_exact(ido, i, wide).value;
    EXPECT_EQ(mms, 2);
    const PassablePacking p = passable_set_packing(ido, i, alloc.bundles[i]);
    EXPECT_LE(p.certificate.bins.size(), 3u);
  }
}

TEST(PassablePacking, KnownBundles) {
  ChoreInstance inst;
  inst.n = 1;
  inst.m = 3;
  inst.sizes = {{6, 5, 5}};
  inst.spec = BinPackingSpec{{10}};
  const PassablePacking p = passable_set_packing(inst, 0, {0, 1, 2});
  EXPECT_EQ(p.certificate.bins.size(), 2u);
  EXPECT_EQ(certificate_value(inst, 0, {0, 1, 2}, p.certificate), 2);

  EXPECT_TRUE(passable_set_packing(inst, 0, {}).certificate.bins.empty());
  EXPECT_THROW(passable_set_packing(inst, 0, {0}, 0), InvalidAllocation);
  EXPECT_NO_THROW(passable_set_packing(inst, 0, {0}, 1));
}

TEST(PassablePacking, NeverBeatsExactAndStaysValid) {
  std::mt19937_64 rng(405);
  for (int k = 0; k < 300; ++k) {
    const ChoreInstance inst = oracle::bin_instance(rng, 1, 1 + static_cast<int>(rng() % 10), 40);
    const ItemSet items = oracle::random_subset(rng, inst.m);
    const PassablePacking p = passable_set_packing(inst, 0, items);
    const Rational bins = certificate_value(inst, 0, items, p.certificate);
    ASSERT_GE(bins, oracle::value(inst, 0, items));
    // q passable-or-acceptable sets pack into at most ceil(3q/2) bins.
    ASSERT_LE(bins, Rational(ceil(make_rational(3 * p.set_count, 2))));
  }
}

// ---------------------------------------------------------------------------

TEST(RoundRobin, DealsItemsInTurn) {
  ChoreInstance inst;
  inst.n = 2;
  inst.m = 5;
  inst.sizes = {{5, 4, 3, 2, 1}, {5, 4, 3, 2, 1}};
  inst.spec = JobSchedulingSpec{{{1}, {1}}};
  const Allocation alloc = round_robin_allocate(inst);
  EXPECT_EQ(alloc.bundles[0], (ItemSet{0, 2, 4}));
  EXPECT_EQ(alloc.bundles[1], (ItemSet{1, 3}));
}

TEST(RoundRobin, TwoMmsAgainstBruteForce) {
  std::mt19937_64 rng(406);
  for (int k = 0; k < 120; ++k) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const ChoreInstance inst =
        to_ido(oracle::job_instance(rng, n, 1 + static_cast<int>(rng() % 7), 3, 5, 20)).instance;
    const Allocation alloc = round_robin_allocate(inst);
    for (int i = 0; i < n; ++i)
      ASSERT_LE(oracle::value(inst, i, alloc.bundles[i]), 2 * oracle::mms(inst, i));
  }
}

TEST(ThresholdSchedule, KnownRun) {
  const std::vector<Size> jobs{4, 3, 3, 1};
  const std::vector<Size> speeds{2, 1};
  // Limits 2 * tau * rho: 8 and 4.
  const ThresholdSchedule s = threshold_schedule(jobs, speeds, Rational(2));
  EXPECT_EQ(s.machines[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(s.machines[1], (std::vector<int>{2, 3}));
  EXPECT_TRUE(s.leftover.empty());
  const ThresholdSchedule tight = threshold_schedule(jobs, speeds, Rational(1));
  EXPECT_EQ(tight.leftover, (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(threshold_schedule(std::vector<Size>{1, 2}, speeds, Rational(1)), std::invalid_argument);
  EXPECT_THROW(threshold_schedule(jobs, speeds, Rational(0)), std::invalid_argument);
}

TEST(ThresholdSchedule, ShareThresholdLeavesNothing) {
  std::mt19937_64 rng(407);
  for (int k = 0; k < 200; ++k) {
    const ChoreInstance inst = oracle::job_instance(rng, 1, 1 + static_cast<int>(rng() % 8), 3, 5, 20);
    ItemSet all(inst.m);
    std::iota(all.begin(), all.end(), 0);
    // Any single bundle: with n = 1 its optimal makespan is the share.
    const Rational opt = oracle::value(inst, 0, all);
    std::vector<Size> jobs = inst.sizes[0];
    std::sort(jobs.rbegin(), jobs.rend());
    const auto s = threshold_schedule(jobs, inst.job_scheduling().speeds[0], opt);
    ASSERT_TRUE(s.leftover.empty());
  }
}

TEST(ThresholdSearch, BoundsMakespanAndIterations) {
  std::mt19937_64 rng(408);
  const Rational delta(1, 10);
  for (int k = 0; k < 200; ++k) {
    std::vector<Size> speeds(oracle::uniform(rng, 1, 3));
    for (auto& r : speeds) r = oracle::uniform(rng, 1, 5);
    std::sort(speeds.rbegin(), speeds.rend());
    std::vector<Size> jobs(oracle::uniform(rng, 1, 9));
    for (auto& s : jobs) s = oracle::uniform(rng, 1, 20);
    std::sort(jobs.rbegin(), jobs.rend());
    const ThresholdSearchResult r = threshold_search_schedule(jobs, speeds, delta);
    ASSERT_TRUE(r.schedule.leftover.empty());
    const Rational opt = oracle::min_makespan(jobs, speeds);
    Rational makespan = 0;
    for (std::size_t l = 0; l < speeds.size(); ++l) {
      ASSERT_LE(Rational(r.schedule.loads[l]), 2 * r.tau * speeds[l]);
      makespan = std::max(makespan, make_rational(r.schedule.loads[l], speeds[l]));
    }
    ASSERT_LE(makespan, 2 * (1 + delta) * opt);
    ASSERT_LE(r.tau, (1 + delta) * opt);
    // tau_0 * 1.1^(iterations - 2) < opt whenever more than one step was taken.
    Rational below = make_rational(jobs[0], speeds[0]);
    for (int t = 0; t + 2 < r.iterations; ++t) below *= 1 + delta;
    if (r.iterations > 1) {
      ASSERT_LT(below, opt);
    }
  }
}

TEST(ThresholdSearch, RejectsBadInput) {
  const std::vector<Size> speeds{1};
  EXPECT_THROW(threshold_search_schedule(std::vector<Size>{}, speeds), std::invalid_argument);
  EXPECT_THROW(threshold_search_schedule(std::vector<Size>{2}, speeds, Rational(0)),
               std::invalid_argument);
}

TEST(AllOrNothing, GivesEverythingToCheapestAgent) {
  ChoreInstance inst;
  inst.n = 3;
  inst.m = 3;
  inst.sizes = {{3, 3, 3}, {1, 1, 1}, {1, 1, 1}};
  inst.spec = AdditiveSpec{};
  const Allocation alloc = all_or_nothing_allocate(inst);
  EXPECT_EQ(alloc.bundles[1], (ItemSet{0, 1, 2}));
  EXPECT_TRUE(alloc.bundles[0].empty());
  EXPECT_TRUE(alloc.bundles[2].empty());
}

// ---------------------------------------------------------------------------

TEST(Solve, DispatchesAndRoundTripsNonIdoInputs) {
  std::mt19937_64 rng(409);
  for (int k = 0; k < 40; ++k) {
    const ChoreInstance bins = oracle::bin_instance(rng, 3, 8, 30);
    const ChoreInstance jobs = oracle::job_instance(rng, 2, 7, 3, 5, 20);
    for (auto a : {AllocatorKind::BagFill, AllocatorKind::BagFill32, AllocatorKind::AllOrNothing}) {
      const SolveResult r = solve(bins, a);
      ASSERT_FALSE(check_partition(r.allocation, bins.n, bins.m));
      ASSERT_EQ(r.certificates.size(), 3u);
      for (int i = 0; i < 3; ++i)
        ASSERT_EQ(certificate_value(bins, i, r.allocation.bundles[i], r.certificates[i].valuation.certificate),
                  r.certificates[i].valuation.value);
    }
    for (auto a : {AllocatorKind::RoundRobin, AllocatorKind::ThresholdSearch}) {
      const SolveResult r = solve(jobs, a);
      ASSERT_FALSE(check_partition(r.allocation, jobs.n, jobs.m));
      for (int i = 0; i < 2; ++i) {
        const auto& c = r.certificates[i];
        ASSERT_EQ(certificate_value(jobs, i, r.allocation.bundles[i], c.valuation.certificate),
                  c.valuation.value);
        if (a == AllocatorKind::ThresholdSearch && c.tau && *c.tau > 0) {
          const auto& sched = std::get<ScheduleCertificate>(c.valuation.certificate);
          const auto& speeds = jobs.job_scheduling().speeds[i];
          for (std::size_t l = 0; l < speeds.size(); ++l)
            ASSERT_LE(Rational(jobs.total_size(i, sched.machines[l])), 2 * *c.tau * speeds[l]);
        }
      }
    }
  }
}

TEST(Solve, RejectsIncompatiblePairs) {
  std::mt19937_64 rng(410);
  EXPECT_THROW(solve(oracle::job_instance(rng, 2, 4, 2, 3, 5), AllocatorKind::BagFill),
               IncompatibleAllocator);
  EXPECT_THROW(solve(oracle::bin_instance(rng, 2, 4, 9), AllocatorKind::RoundRobin),
               IncompatibleAllocator);
  EXPECT_THROW(parse_allocator("greedy"), std::invalid_argument);
  EXPECT_EQ(parse_allocator("threshold-search"), AllocatorKind::ThresholdSearch);
}

TEST(Solve, RoundRobinSingleAgent) {
  ChoreInstance inst;
  inst.n = 1;
  inst.m = 3;
  inst.sizes = {{1, 5, 2}};
  inst.spec = JobSchedulingSpec{{{2}}};
  const SolveResult r = solve(inst, AllocatorKind::RoundRobin);
  EXPECT_EQ(r.allocation.bundles[0], (ItemSet{0, 1, 2}));
  EXPECT_TRUE(r.ido_round_trip);
}
