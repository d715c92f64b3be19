#include "chores/valuation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace chores {

namespace {

using Wide = __int128;

// Positions of positive sizes, largest first, index ascending on ties.
std::vector<int> positive_order(std::span<const Size> sizes) {
  std::vector<int> order;
  for (int p = 0; p < static_cast<int>(sizes.size()); ++p)
    if (sizes[p] > 0) order.push_back(p);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[a] > sizes[b]; });
  return order;
}

std::vector<int> zero_positions(std::span<const Size> sizes) {
  std::vector<int> zeros;
  for (int p = 0; p < static_cast<int>(sizes.size()); ++p)
    if (sizes[p] == 0) zeros.push_back(p);
  return zeros;
}

Size ceil_div(Size a, Size b) { return (a + b - 1) / b; }

// Branch and bound over items in nonincreasing size. Bins are labelled in
// opening order; identical consecutive items go to nondecreasing bins, and bins
// with equal residual load are tried once per level.
class BinPackingSearch {
 public:
  BinPackingSearch(std::vector<Size> sizes, Size capacity)
      : sizes_(std::move(sizes)), capacity_(capacity), bin_of_(sizes_.size(), -1) {
    suffix_.assign(sizes_.size() + 1, 0);
    for (int k = static_cast<int>(sizes_.size()) - 1; k >= 0; --k)
      suffix_[k] = suffix_[k + 1] + sizes_[k];
    const Size large =
        std::count_if(sizes_.begin(), sizes_.end(), [&](Size s) { return 2 * s > capacity_; });
    lower_bound_ = std::max<Size>(ceil_div(suffix_[0], capacity_), large);
  }

  // Returns the bin index of each item.
  std::vector<int> solve(std::vector<int> incumbent, int incumbent_bins) {
    best_ = std::move(incumbent);
    best_bins_ = incumbent_bins;
    if (best_bins_ > lower_bound_) {
      loads_.clear();
      descend(0);
    }
    return best_;
  }

  int best_bins() const { return best_bins_; }

 private:
  void descend(std::size_t k) {
    const int open = static_cast<int>(loads_.size());
    if (k == sizes_.size()) {
      if (open < best_bins_) {
        best_bins_ = open;
        best_ = bin_of_;
      }
      return;
    }
    if (open >= best_bins_) return;
    Size free_space = 0;
    for (Size load : loads_) free_space += capacity_ - load;
    const Size overflow = std::max<Size>(0, suffix_[k] - free_space);
    if (open + ceil_div(overflow, capacity_) >= best_bins_) return;

    const Size s = sizes_[k];
    const int start = (k > 0 && sizes_[k - 1] == s) ? bin_of_[k - 1] : 0;
    std::set<Size> tried;
    for (int b = start; b < open; ++b) {
      if (loads_[b] + s > capacity_ || !tried.insert(loads_[b]).second) continue;
      loads_[b] += s;
      bin_of_[k] = b;
      descend(k + 1);
      loads_[b] -= s;
      if (best_bins_ == lower_bound_) return;
    }
    if (open + 1 < best_bins_) {
      loads_.push_back(s);
      bin_of_[k] = open;
      descend(k + 1);
      loads_.pop_back();
    }
  }

  std::vector<Size> sizes_;
  Size capacity_;
  std::vector<Size> suffix_;
  std::vector<Size> loads_;
  std::vector<int> bin_of_;
  std::vector<int> best_;
  int best_bins_ = 0;
  Size lower_bound_ = 0;
};

// Completion time load/speed compared exactly.
bool slower(Size load_a, Size speed_a, Size load_b, Size speed_b) {
  return static_cast<Wide>(load_a) * speed_b > static_cast<Wide>(load_b) * speed_a;
}

Rational makespan_of(std::span<const Size> loads, std::span<const Size> speeds) {
  Rational worst = 0;
  for (std::size_t l = 0; l < loads.size(); ++l) {
    Rational t = make_rational(loads[l], speeds[l]);
    if (t > worst) worst = t;
  }
  return worst;
}

class SchedulingSearch {
 public:
  SchedulingSearch(std::vector<Size> sizes, std::vector<Size> speeds)
      : sizes_(std::move(sizes)), speeds_(std::move(speeds)), loads_(speeds_.size(), 0),
        machine_of_(sizes_.size(), -1) {
    const Size total = std::accumulate(sizes_.begin(), sizes_.end(), Size{0});
    const Size speed_sum = std::accumulate(speeds_.begin(), speeds_.end(), Size{0});
    lower_bound_ = make_rational(total, speed_sum);
    if (!sizes_.empty()) {
      const Rational single = make_rational(sizes_[0], speeds_[0]);
      if (single > lower_bound_) lower_bound_ = single;
    }
  }

  // incumbent_load / incumbent_speed is the incumbent makespan.
  std::vector<int> solve(std::vector<int> incumbent, Size incumbent_load, Size incumbent_speed) {
    best_ = std::move(incumbent);
    best_load_ = incumbent_load;
    best_speed_ = incumbent_speed;
    if (Rational(BigInt(best_load_), BigInt(best_speed_)) > lower_bound_) descend(0, 0, 1);
    return best_;
  }

 private:
  // (span_load, span_speed) is the current partial makespan.
  void descend(std::size_t k, Size span_load, Size span_speed) {
    if (k == sizes_.size()) {
      if (slower(best_load_, best_speed_, span_load, span_speed)) {
        best_load_ = span_load;
        best_speed_ = span_speed;
        best_ = machine_of_;
        done_ = !(Rational(BigInt(best_load_), BigInt(best_speed_)) > lower_bound_);
      }
      return;
    }
    const Size s = sizes_[k];
    for (std::size_t l = 0; l < speeds_.size(); ++l) {
      bool duplicate = false;
      for (std::size_t e = 0; e < l && !duplicate; ++e)
        duplicate = speeds_[e] == speeds_[l] && loads_[e] == loads_[l];
      if (duplicate) continue;
      const Size next = loads_[l] + s;
      // Keep only strictly better schedules.
      if (!slower(best_load_, best_speed_, next, speeds_[l])) continue;
      loads_[l] = next;
      machine_of_[k] = static_cast<int>(l);
      if (slower(next, speeds_[l], span_load, span_speed))
        descend(k + 1, next, speeds_[l]);
      else
        descend(k + 1, span_load, span_speed);
      loads_[l] -= s;
      if (done_) return;
    }
  }

  std::vector<Size> sizes_;
  std::vector<Size> speeds_;
  std::vector<Size> loads_;
  std::vector<int> machine_of_;
  std::vector<int> best_;
  Size best_load_ = 0;
  Size best_speed_ = 1;
  Rational lower_bound_;
  bool done_ = false;
};

void check_agent_and_items(const ChoreInstance& inst, int agent, const ItemSet& items) {
  if (agent < 0 || agent >= inst.n) throw std::out_of_range("agent index out of range");
  for (int j : items)
    if (j < 0 || j >= inst.m) throw std::out_of_range("item index out of range");
}

std::vector<Size> sizes_of(const ChoreInstance& inst, int agent, const ItemSet& items) {
  std::vector<Size> out;
  out.reserve(items.size());
  for (int j : items) out.push_back(inst.sizes[agent][j]);
  return out;
}

std::vector<ItemSet> to_items(const std::vector<std::vector<int>>& groups, const ItemSet& items) {
  std::vector<ItemSet> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    ItemSet set;
    for (int p : g) set.push_back(items[p]);
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

Valuation packing_valuation(const ItemSet& items,
                            const PackingResult& packing, bool exact) {
  PackingCertificate cert{to_items(packing.bins, items)};
  return Valuation{Rational(packing.bin_count()), std::move(cert), exact};
}

Valuation schedule_valuation(const ItemSet& items,
                             const ScheduleResult& schedule, bool exact) {
  ScheduleCertificate cert{to_items(schedule.machines, items), schedule.makespan};
  return Valuation{schedule.makespan, std::move(cert), exact};
}

Valuation covering_value(const ChoreInstance& inst, int agent, const ItemSet& items) {
  const auto& points = inst.covering_plane().points;
  std::set<int> planes;
  for (int j : items) planes.insert(points[j][agent]);
  return Valuation{Rational(static_cast<long long>(planes.size())),
                   PlaneCover{std::vector<int>(planes.begin(), planes.end())}, true};
}

Valuation additive_value(const ChoreInstance& inst, int agent, const ItemSet& items) {
  return Valuation{Rational(inst.total_size(agent, items)), std::monostate{}, true};
}

}  // namespace

PackingResult pack_first_fit_decreasing(std::span<const Size> sizes, Size capacity) {
  PackingResult result;
  std::vector<Size> loads;
  for (int p : positive_order(sizes)) {
    std::size_t b = 0;
    while (b < loads.size() && loads[b] + sizes[p] > capacity) ++b;
    if (b == loads.size()) {
      loads.push_back(0);
      result.bins.emplace_back();
    }
    loads[b] += sizes[p];
    result.bins[b].push_back(p);
  }
  auto zeros = zero_positions(sizes);
  if (!zeros.empty()) {
    if (result.bins.empty()) result.bins.emplace_back();
    result.bins[0].insert(result.bins[0].end(), zeros.begin(), zeros.end());
  }
  return result;
}

PackingResult pack_exact(std::span<const Size> sizes, Size capacity) {
  for (Size s : sizes)
    if (s > capacity) throw std::invalid_argument("item larger than bin capacity");
  PackingResult ffd = pack_first_fit_decreasing(sizes, capacity);
  const std::vector<int> order = positive_order(sizes);
  if (order.empty()) return ffd;

  std::vector<Size> sorted;
  for (int p : order) sorted.push_back(sizes[p]);
  std::vector<int> incumbent(order.size(), -1);
  for (int b = 0; b < ffd.bin_count(); ++b)
    for (int p : ffd.bins[b])
      if (sizes[p] > 0) {
        auto at = std::find(order.begin(), order.end(), p) - order.begin();
        incumbent[at] = b;
      }

  BinPackingSearch search(sorted, capacity);
  std::vector<int> assignment = search.solve(incumbent, ffd.bin_count());
  PackingResult result;
  result.bins.resize(search.best_bins());
  for (std::size_t k = 0; k < order.size(); ++k) result.bins[assignment[k]].push_back(order[k]);
  auto zeros = zero_positions(sizes);
  result.bins[0].insert(result.bins[0].end(), zeros.begin(), zeros.end());
  return result;
}

ScheduleResult schedule_lpt(std::span<const Size> sizes, std::span<const Size> speeds) {
  if (speeds.empty()) throw std::invalid_argument("no machines");
  ScheduleResult result;
  result.machines.resize(speeds.size());
  result.loads.assign(speeds.size(), 0);
  for (int p : positive_order(sizes)) {
    std::size_t best = 0;
    for (std::size_t l = 1; l < speeds.size(); ++l)
      if (slower(result.loads[best] + sizes[p], speeds[best], result.loads[l] + sizes[p],
                 speeds[l]))
        best = l;
    result.loads[best] += sizes[p];
    result.machines[best].push_back(p);
  }
  for (int p : zero_positions(sizes)) result.machines[0].push_back(p);
  result.makespan = makespan_of(result.loads, speeds);
  return result;
}

ScheduleResult schedule_exact(std::span<const Size> sizes, std::span<const Size> speeds) {
  ScheduleResult lpt = schedule_lpt(sizes, speeds);
  const std::vector<int> order = positive_order(sizes);
  if (order.empty()) return lpt;

  std::vector<Size> sorted;
  for (int p : order) sorted.push_back(sizes[p]);
  std::vector<int> incumbent(order.size(), -1);
  std::size_t worst = 0;
  for (std::size_t l = 0; l < speeds.size(); ++l) {
    for (int p : lpt.machines[l])
      if (sizes[p] > 0) incumbent[std::find(order.begin(), order.end(), p) - order.begin()] =
                            static_cast<int>(l);
    if (slower(lpt.loads[l], speeds[l], lpt.loads[worst], speeds[worst])) worst = l;
  }

  SchedulingSearch search(sorted, std::vector<Size>(speeds.begin(), speeds.end()));
  std::vector<int> assignment = search.solve(incumbent, lpt.loads[worst], speeds[worst]);
  ScheduleResult result;
  result.machines.resize(speeds.size());
  result.loads.assign(speeds.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    result.machines[assignment[k]].push_back(order[k]);
    result.loads[assignment[k]] += sorted[k];
  }
  for (int p : zero_positions(sizes)) result.machines[0].push_back(p);
  result.makespan = makespan_of(result.loads, speeds);
  return result;
}

bool exact_within_budget(const ChoreInstance& inst, int agent, std::size_t item_count,
                         const OracleBudget& budget) {
  switch (inst.kind()) {
    case ValuationKind::BinPacking:
      return item_count <= static_cast<std::size_t>(budget.max_items);
    case ValuationKind::JobScheduling:
      return item_count <= static_cast<std::size_t>(budget.max_items) &&
             inst.job_scheduling().speeds[agent].size() <=
                 static_cast<std::size_t>(budget.max_machines);
    case ValuationKind::CoveringPlane:
    case ValuationKind::Additive:
      return true;
  }
  return false;
}

Valuation value_exact(const ChoreInstance& inst, int agent, const ItemSet& items,
                      const OracleBudget& budget) {
  check_agent_and_items(inst, agent, items);
  if (!exact_within_budget(inst, agent, items.size(), budget))
    throw BudgetExceeded("exact oracle budget exceeded: " + std::to_string(items.size()) +
                         " items for agent " + std::to_string(agent + 1));
  switch (inst.kind()) {
    case ValuationKind::BinPacking: {
      auto sizes = sizes_of(inst, agent, items);
      return packing_valuation(items,
                               pack_exact(sizes, inst.bin_packing().capacities[agent]), true);
    }
    case ValuationKind::JobScheduling: {
      auto sizes = sizes_of(inst, agent, items);
      return schedule_valuation(items,
                                schedule_exact(sizes, inst.job_scheduling().speeds[agent]), true);
    }
    case ValuationKind::CoveringPlane: return covering_value(inst, agent, items);
    case ValuationKind::Additive: return additive_value(inst, agent, items);
  }
  throw InvalidInstance("unknown valuation kind");
}

Valuation value_upper_heuristic(const ChoreInstance& inst, int agent, const ItemSet& items) {
  check_agent_and_items(inst, agent, items);
  switch (inst.kind()) {
    case ValuationKind::BinPacking: {
      auto sizes = sizes_of(inst, agent, items);
      return packing_valuation(items,
          pack_first_fit_decreasing(sizes, inst.bin_packing().capacities[agent]), false);
    }
    case ValuationKind::JobScheduling: {
      auto sizes = sizes_of(inst, agent, items);
      return schedule_valuation(items,
                                schedule_lpt(sizes, inst.job_scheduling().speeds[agent]), false);
    }
    case ValuationKind::CoveringPlane: return covering_value(inst, agent, items);
    case ValuationKind::Additive: return additive_value(inst, agent, items);
  }
  throw InvalidInstance("unknown valuation kind");
}

Valuation value_best_effort(const ChoreInstance& inst, int agent, const ItemSet& items,
                            const OracleBudget& budget) {
  if (exact_within_budget(inst, agent, items.size(), budget))
    return value_exact(inst, agent, items, budget);
  return value_upper_heuristic(inst, agent, items);
}

namespace {

void require_cover(const ItemSet& items, const std::vector<ItemSet>& groups) {
  std::multiset<int> covered;
  for (const auto& g : groups) covered.insert(g.begin(), g.end());
  std::multiset<int> expected(items.begin(), items.end());
  if (covered != expected) throw InvalidAllocation("certificate does not partition the set");
}

}  // namespace

Rational certificate_value(const ChoreInstance& inst, int agent, const ItemSet& items,
                           const Certificate& cert) {
  check_agent_and_items(inst, agent, items);
  switch (inst.kind()) {
    case ValuationKind::BinPacking: {
      const auto* packing = std::get_if<PackingCertificate>(&cert);
      if (packing == nullptr) throw InvalidAllocation("expected a packing certificate");
      require_cover(items, packing->bins);
      const Size cap = inst.bin_packing().capacities[agent];
      for (const auto& bin : packing->bins)
        if (inst.total_size(agent, bin) > cap) throw InvalidAllocation("bin over capacity");
      return Rational(static_cast<long long>(packing->bins.size()));
    }
    case ValuationKind::JobScheduling: {
      const auto* schedule = std::get_if<ScheduleCertificate>(&cert);
      if (schedule == nullptr) throw InvalidAllocation("expected a schedule certificate");
      const auto& speeds = inst.job_scheduling().speeds[agent];
      if (schedule->machines.size() > speeds.size())
        throw InvalidAllocation("schedule uses more machines than the agent owns");
      require_cover(items, schedule->machines);
      std::vector<Size> loads;
      for (const auto& machine : schedule->machines) loads.push_back(inst.total_size(agent, machine));
      Rational makespan = makespan_of(loads, std::span<const Size>(speeds).first(loads.size()));
      if (makespan != schedule->makespan)
        throw InvalidAllocation("schedule certificate misstates its makespan");
      return makespan;
    }
    case ValuationKind::CoveringPlane: {
      const auto* cover = std::get_if<PlaneCover>(&cert);
      if (cover == nullptr) throw InvalidAllocation("expected a plane cover");
      std::set<int> planes(cover->planes.begin(), cover->planes.end());
      const auto& points = inst.covering_plane().points;
      for (int j : items)
        if (!planes.contains(points[j][agent]))
          throw InvalidAllocation("plane cover misses an item");
      return Rational(static_cast<long long>(planes.size()));
    }
    case ValuationKind::Additive:
      return Rational(inst.total_size(agent, items));
  }
  throw InvalidInstance("unknown valuation kind");
}

namespace {

std::string describe(const ItemSet& set) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < set.size(); ++k) os << (k ? "," : "") << set[k] + 1;
  os << "}";
  return os.str();
}

ItemSet with(ItemSet set, int e) {
  set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  return set;
}

}  // namespace

PropertyReport check_subadditive_submodular(const ChoreInstance& inst, int agent, int trials,
                                            std::uint64_t seed, const OracleBudget& budget) {
  PropertyReport report;
  report.trials = trials;
  if (inst.m == 0) return report;
  int limit = inst.m;
  if (inst.kind() == ValuationKind::BinPacking || inst.kind() == ValuationKind::JobScheduling)
    limit = std::min(limit, budget.max_items);
  if (!exact_within_budget(inst, agent, static_cast<std::size_t>(limit), budget))
    throw BudgetExceeded("agent machine count exceeds the exact scheduling budget");

  std::map<ItemSet, Rational> memo;
  auto value = [&](const ItemSet& s) -> const Rational& {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, value_exact(inst, agent, s, budget).value).first;
    return it->second;
  };
  auto note = [&](const std::string& text) {
    if (report.examples.size() < 5) report.examples.push_back(text);
  };

  std::mt19937_64 rng(seed);
  std::vector<int> all(inst.m);
  std::iota(all.begin(), all.end(), 0);
  auto random_subset = [&](int max_size) {
    std::shuffle(all.begin(), all.end(), rng);
    const int size = std::uniform_int_distribution<int>(0, max_size)(rng);
    ItemSet s(all.begin(), all.begin() + size);
    std::sort(s.begin(), s.end());
    return s;
  };

  for (int t = 0; t < trials; ++t) {
    // Nested S ⊆ T, e ∉ T.
    const int nested_limit = std::min(limit - 1, inst.m - 1);
    if (nested_limit >= 0) {
      ItemSet big = random_subset(nested_limit);
      ItemSet small;
      for (int j : big)
        if (rng() & 1) small.push_back(j);
      std::vector<int> outside;
      for (int j = 0; j < inst.m; ++j)
        if (!std::binary_search(big.begin(), big.end(), j)) outside.push_back(j);
      const int e = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
      const Rational gain_big = value(with(big, e)) - value(big);
      const Rational gain_small = value(with(small, e)) - value(small);
      if (gain_big > gain_small) {
        ++report.submodular_violations;
        note("submodularity: S=" + describe(small) + " T=" + describe(big) +
             " e=" + std::to_string(e + 1));
      }
      if (value(small) > value(big)) {
        ++report.monotone_violations;
        note("monotonicity: S=" + describe(small) + " T=" + describe(big));
      }
    }
    // Random pair with |S ∪ T| within the limit.
    ItemSet both = random_subset(limit);
    ItemSet left, right;
    for (int j : both) {
      const auto side = rng() % 3;
      if (side != 1) left.push_back(j);
      if (side != 0) right.push_back(j);
    }
    if (value(both) > value(left) + value(right)) {
      ++report.subadditive_violations;
      note("subadditivity: S=" + describe(left) + " T=" + describe(right));
    }
  }
  return report;
}

}  // namespace chores
