#include <algorithm>
#include <numeric>

#include "chores/allocators.hpp"
#include "chores/ido.hpp"

namespace chores {

Allocation round_robin_allocate(const ChoreInstance& ido) {
  require_valid(ido);
  if (!is_ido(ido)) throw InvalidInstance("round robin needs an identical-ordering instance");
  Allocation alloc{std::vector<ItemSet>(ido.n)};
  for (int j = 0; j < ido.m; ++j) alloc.bundles[j % ido.n].push_back(j);
  return alloc;
}

ThresholdSchedule threshold_schedule(std::span<const Size> jobs, std::span<const Size> speeds,
                                     const Rational& tau) {
  if (!std::is_sorted(jobs.begin(), jobs.end(), std::greater<>()))
    throw std::invalid_argument("threshold schedule: jobs must be nonincreasing");
  if (!std::is_sorted(speeds.begin(), speeds.end(), std::greater<>()))
    throw std::invalid_argument("threshold schedule: speeds must be nonincreasing");
  if (tau <= 0) throw std::invalid_argument("threshold schedule: tau must be positive");

  ThresholdSchedule out;
  out.tau = tau;
  out.machines.resize(speeds.size());
  out.loads.assign(speeds.size(), 0);
  std::size_t g = 0;
  for (std::size_t l = 0; l < speeds.size(); ++l) {
    const Rational limit = 2 * tau * speeds[l];
    while (g < jobs.size() && Rational(out.loads[l] + jobs[g]) <= limit) {
      out.machines[l].push_back(static_cast<int>(g));
      out.loads[l] += jobs[g];
      ++g;
    }
  }
  for (; g < jobs.size(); ++g) out.leftover.push_back(static_cast<int>(g));
  return out;
}

ThresholdSearchResult threshold_search_schedule(std::span<const Size> jobs,
                                                std::span<const Size> speeds,
                                                const Rational& delta) {
  if (jobs.empty() || speeds.empty())
    throw std::invalid_argument("threshold search needs at least one job and one machine");
  if (delta <= 0) throw std::invalid_argument("threshold search: delta must be positive");
  if (jobs.front() <= 0) throw std::invalid_argument("threshold search: jobs must have positive size");

  ThresholdSearchResult result;
  result.tau = make_rational(jobs.front(), speeds.front());
  const Rational growth = 1 + delta;
  for (;;) {
    ++result.iterations;
    result.schedule = threshold_schedule(jobs, speeds, result.tau);
    if (result.schedule.leftover.empty()) return result;
    result.tau *= growth;
  }
}

AgentThresholdSchedule threshold_schedule_bundle(const ChoreInstance& inst, int agent,
                                                 const ItemSet& bundle, const Rational& delta) {
  const auto& row = inst.sizes[agent];
  const auto& speeds = inst.job_scheduling().speeds[agent];
  ItemSet order = bundle;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return row[a] > row[b]; });

  AgentThresholdSchedule out;
  out.certificate.machines.resize(speeds.size());
  if (order.empty() || row[order.front()] == 0) {
    // Nothing with positive size: the whole bundle runs instantly on machine 1.
    out.certificate.machines[0] = bundle;
    out.certificate.makespan = 0;
    out.search.tau = 0;
    return out;
  }
  std::vector<Size> jobs;
  for (int j : order) jobs.push_back(row[j]);
  out.search = threshold_search_schedule(jobs, speeds, delta);
  Rational makespan = 0;
  for (std::size_t l = 0; l < speeds.size(); ++l) {
    for (int p : out.search.schedule.machines[l]) out.certificate.machines[l].push_back(order[p]);
    std::sort(out.certificate.machines[l].begin(), out.certificate.machines[l].end());
    makespan = std::max(makespan, make_rational(out.search.schedule.loads[l], speeds[l]));
  }
  out.certificate.makespan = makespan;
  return out;
}

Allocation all_or_nothing_allocate(const ChoreInstance& inst, const OracleBudget& budget) {
  require_valid(inst);
  ItemSet everything(inst.m);
  std::iota(everything.begin(), everything.end(), 0);
  int best = 0;
  Rational best_value;
  for (int i = 0; i < inst.n; ++i) {
    Rational v = value_best_effort(inst, i, everything, budget).value;
    if (i == 0 || v < best_value) {
      best = i;
      best_value = v;
    }
  }
  Allocation alloc{std::vector<ItemSet>(inst.n)};
  alloc.bundles[best] = std::move(everything);
  return alloc;
}

std::string_view allocator_name(AllocatorKind kind) {
  switch (kind) {
    case AllocatorKind::BagFill: return "bagfill";
    case AllocatorKind::BagFill32: return "bagfill32";
    case AllocatorKind::RoundRobin: return "roundrobin";
    case AllocatorKind::ThresholdSearch: return "threshold-search";
    case AllocatorKind::AllOrNothing: return "allornothing";
  }
  return "unknown";
}

AllocatorKind parse_allocator(std::string_view name) {
  for (auto kind : {AllocatorKind::BagFill, AllocatorKind::BagFill32, AllocatorKind::RoundRobin,
                    AllocatorKind::ThresholdSearch, AllocatorKind::AllOrNothing})
    if (allocator_name(kind) == name) return kind;
  throw std::invalid_argument("unknown allocator '" + std::string(name) + "'");
}

bool allocator_supports(AllocatorKind allocator, ValuationKind valuation) {
  switch (allocator) {
    case AllocatorKind::BagFill:
    case AllocatorKind::BagFill32: return valuation == ValuationKind::BinPacking;
    case AllocatorKind::RoundRobin:
    case AllocatorKind::ThresholdSearch: return valuation == ValuationKind::JobScheduling;
    case AllocatorKind::AllOrNothing: return true;
  }
  return false;
}

SolveResult solve(const ChoreInstance& inst, AllocatorKind allocator, const SolveOptions& options) {
  require_valid(inst);
  if (!allocator_supports(allocator, inst.kind()))
    throw IncompatibleAllocator("allocator '" + std::string(allocator_name(allocator)) +
                                "' does not support " + std::string(kind_name(inst.kind())) +
                                " instances");
  SolveResult result;
  result.allocator = allocator;

  if (allocator == AllocatorKind::AllOrNothing) {
    result.allocation = all_or_nothing_allocate(inst, options.budget);
  } else {
    const bool ido = is_ido(inst);
    result.ido_round_trip = !ido;
    IdoReduction reduction = ido ? IdoReduction{inst, {}} : to_ido(inst);
    Allocation ido_alloc;
    switch (allocator) {
      case AllocatorKind::BagFill: ido_alloc = bag_fill_allocate(reduction.instance); break;
      case AllocatorKind::BagFill32: ido_alloc = bag_fill_allocate_v2(reduction.instance); break;
      default: ido_alloc = round_robin_allocate(reduction.instance); break;
    }
    result.allocation = ido ? ido_alloc : lift_allocation(inst, ido_alloc);
  }
  require_partition(result.allocation, inst.n, inst.m);

  for (int i = 0; i < inst.n; ++i) {
    const ItemSet& bundle = result.allocation.bundles[i];
    AgentCertificate cert;
    switch (allocator) {
      case AllocatorKind::BagFill32: {
        PassablePacking packing = passable_set_packing(inst, i, bundle);
        const auto bins = static_cast<long long>(packing.certificate.bins.size());
        cert.valuation = Valuation{Rational(bins), std::move(packing.certificate), false};
        break;
      }
      case AllocatorKind::ThresholdSearch: {
        AgentThresholdSchedule schedule = threshold_schedule_bundle(inst, i, bundle, options.delta);
        cert.tau = schedule.search.tau;
        cert.iterations = schedule.search.iterations;
        cert.valuation = Valuation{schedule.certificate.makespan, std::move(schedule.certificate),
                                   false};
        break;
      }
      default: cert.valuation = value_best_effort(inst, i, bundle, options.budget); break;
    }
    result.certificates.push_back(std::move(cert));
  }
  return result;
}

}  // namespace chores
