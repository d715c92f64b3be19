#include "chores/mms.hpp"

#include <algorithm>
#include <numeric>

#include "chores/subset_cache.hpp"

namespace chores {

std::string_view method_name(BoundMethod method) {
  switch (method) {
    case BoundMethod::Lemma1Singleton: return "lemma1-singleton";
    case BoundMethod::Lemma1Average: return "lemma1-average";
    case BoundMethod::Lemma2Capacity: return "lemma2-capacity";
    case BoundMethod::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

namespace {

ItemSet all_items(int m) {
  ItemSet items(m);
  std::iota(items.begin(), items.end(), 0);
  return items;
}

bool integer_valued(ValuationKind kind) { return kind != ValuationKind::JobScheduling; }

// A value no larger than v_i(M), exact when the oracle budget allows.
Rational grand_value_lower(const ChoreInstance& inst, int agent, const OracleBudget& budget) {
  if (exact_within_budget(inst, agent, static_cast<std::size_t>(inst.m), budget))
    return value_exact(inst, agent, all_items(inst.m), budget).value;
  const Size total = inst.total_size(agent);
  if (inst.kind() == ValuationKind::BinPacking) {
    const Size cap = inst.bin_packing().capacities[agent];
    return Rational((total + cap - 1) / cap);
  }
  const auto& speeds = inst.job_scheduling().speeds[agent];
  const Size speed_sum = std::accumulate(speeds.begin(), speeds.end(), Size{0});
  Rational bound = make_rational(total, speed_sum);
  const Size largest = *std::max_element(inst.sizes[agent].begin(), inst.sizes[agent].end());
  return std::max(bound, make_rational(largest, speeds[0]));
}

// Items in the agent's nonincreasing size order (index order without sizes).
std::vector<int> agent_order(const ChoreInstance& inst, int agent) {
  std::vector<int> order = all_items(inst.m);
  if (inst.has_sizes())
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.sizes[agent][a] > inst.sizes[agent][b];
    });
  return order;
}

std::vector<Mask> round_robin_blocks(const ChoreInstance& inst, int agent) {
  std::vector<Mask> blocks(inst.n, 0);
  const auto order = agent_order(inst, agent);
  for (std::size_t k = 0; k < order.size(); ++k) blocks[k % inst.n] |= Mask{1} << order[k];
  return blocks;
}

// The agent's own planes C_{i,1..n} partition the points.
std::vector<Mask> plane_blocks(const ChoreInstance& inst, int agent) {
  std::vector<Mask> blocks(inst.n, 0);
  const auto& points = inst.covering_plane().points;
  for (int j = 0; j < inst.m; ++j) blocks[points[j][agent] - 1] |= Mask{1} << j;
  return blocks;
}

Allocation to_allocation(const std::vector<Mask>& blocks) {
  Allocation alloc;
  for (Mask b : blocks) alloc.bundles.push_back(items_of(b));
  return alloc;
}

class PartitionSearch {
 public:
  PartitionSearch(SubsetValueCache& cache, std::vector<int> order, int n, Rational lower)
      : cache_(cache), order_(std::move(order)), n_(n), lower_(std::move(lower)), blocks_(n, 0) {}

  void run(std::vector<Mask> incumbent, Rational incumbent_value) {
    best_blocks_ = std::move(incumbent);
    best_ = std::move(incumbent_value);
    if (best_ > lower_) descend(0, 0, Rational(0));
  }

  const Rational& best() const { return best_; }
  const std::vector<Mask>& best_blocks() const { return best_blocks_; }

 private:
  void descend(std::size_t k, int used, const Rational& partial) {
    if (k == order_.size()) {
      best_ = partial;
      best_blocks_ = blocks_;
      done_ = !(best_ > lower_);
      return;
    }
    const Mask bit = Mask{1} << order_[k];
    const int limit = std::min(used + 1, n_);
    for (int b = 0; b < limit; ++b) {
      blocks_[b] |= bit;
      const Rational& v = cache_.value(blocks_[b]);
      if (v < best_) descend(k + 1, std::max(used, b + 1), std::max(partial, v));
      blocks_[b] &= ~bit;
      if (done_) return;
    }
  }

  SubsetValueCache& cache_;
  std::vector<int> order_;
  int n_;
  Rational lower_;
  std::vector<Mask> blocks_;
  std::vector<Mask> best_blocks_;
  Rational best_;
  bool done_ = false;
};

Rational max_block_value(SubsetValueCache& cache, const std::vector<Mask>& blocks) {
  Rational worst = 0;
  for (Mask b : blocks) worst = std::max(worst, cache.value(b));
  return worst;
}

}  // namespace

MmsBounds mms_bounds(const ChoreInstance& inst, int agent, const OracleBudget& budget) {
  if (agent < 0 || agent >= inst.n) throw std::out_of_range("agent index out of range");
  MmsBounds bounds{Rational(0), Rational(0), BoundMethod::Lemma1Singleton, true};
  if (inst.m == 0) return bounds;

  Rational singleton = 0;
  for (int j = 0; j < inst.m; ++j)
    singleton = std::max(singleton, value_exact(inst, agent, {j}, budget).value);
  bounds.lower = singleton;

  Rational average = grand_value_lower(inst, agent, budget) / inst.n;
  if (integer_valued(inst.kind())) average = Rational(ceil(average));
  if (average > bounds.lower) {
    bounds.lower = average;
    bounds.method = BoundMethod::Lemma1Average;
  }

  if (inst.kind() == ValuationKind::BinPacking) {
    const Size denom = inst.n * inst.bin_packing().capacities[agent];
    Rational capacity_bound = Rational(ceil(make_rational(inst.total_size(agent), denom)));
    if (capacity_bound > bounds.lower) {
      bounds.lower = capacity_bound;
      bounds.method = BoundMethod::Lemma2Capacity;
    }
  }

  Valuation grand = value_best_effort(inst, agent, all_items(inst.m), budget);
  bounds.upper = grand.value;
  bounds.upper_exact = grand.exact;
  return bounds;
}

MmsBounds bounds_from_exact(const MmsEntry& entry) {
  return MmsBounds{entry.value, entry.value, BoundMethod::Exhaustive, true};
}

MmsEntry mms_exact(const ChoreInstance& inst, int agent, const OracleBudget& budget) {
  if (agent < 0 || agent >= inst.n) throw std::out_of_range("agent index out of range");
  if (inst.m == 0) return MmsEntry{Rational(0), Allocation{std::vector<ItemSet>(inst.n)}};

  const bool within =
      inst.m <= budget.mms_max_items && inst.n <= budget.mms_max_agents;
  const Rational lower = mms_bounds(inst, agent, budget).lower;

  if (inst.kind() == ValuationKind::CoveringPlane) {
    Allocation planes{std::vector<ItemSet>(inst.n)};
    const auto& points = inst.covering_plane().points;
    for (int j = 0; j < inst.m; ++j) planes.bundles[points[j][agent] - 1].push_back(j);
    Rational worst = 0;
    for (const auto& bundle : planes.bundles)
      worst = std::max(worst, value_exact(inst, agent, bundle, budget).value);
    if (worst == lower) return MmsEntry{worst, std::move(planes)};
  }
  if (inst.m > SubsetValueCache::kMaxItems)
    throw BudgetExceeded("partition search supports at most 62 items");
  SubsetValueCache cache(inst, agent, budget);

  std::vector<Mask> incumbent;
  Rational incumbent_value;
  try {
    incumbent = inst.kind() == ValuationKind::CoveringPlane ? plane_blocks(inst, agent)
                                                            : round_robin_blocks(inst, agent);
    incumbent_value = max_block_value(cache, incumbent);
  } catch (const BudgetExceeded&) {
    if (within) throw;
    throw BudgetExceeded("MMS partition search over budget");
  }
  if (incumbent_value == lower) return MmsEntry{incumbent_value, to_allocation(incumbent)};
  if (!within)
    throw BudgetExceeded("MMS partition search over budget: m = " + std::to_string(inst.m) +
                         ", n = " + std::to_string(inst.n));

  PartitionSearch search(cache, agent_order(inst, agent), inst.n, lower);
  search.run(std::move(incumbent), incumbent_value);
  return MmsEntry{search.best(), to_allocation(search.best_blocks())};
}

MmsProfile mms_profile(const ChoreInstance& inst, const OracleBudget& budget) {
  MmsProfile profile;
  for (int i = 0; i < inst.n; ++i) profile.agents.push_back(mms_exact(inst, i, budget));
  return profile;
}

}  // namespace chores
