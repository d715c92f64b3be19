#include "chores/instance.hpp"

#include <algorithm>
#include <numeric>

namespace chores {

std::string_view kind_name(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::BinPacking: return "bin_packing";
    case ValuationKind::JobScheduling: return "job_scheduling";
    case ValuationKind::CoveringPlane: return "covering_plane";
    case ValuationKind::Additive: return "additive";
  }
  return "unknown";
}

ValuationKind parse_kind(std::string_view name) {
  if (name == "bin_packing") return ValuationKind::BinPacking;
  if (name == "job_scheduling") return ValuationKind::JobScheduling;
  if (name == "covering_plane") return ValuationKind::CoveringPlane;
  if (name == "additive") return ValuationKind::Additive;
  throw InvalidInstance("unknown valuation kind '" + std::string(name) + "'");
}

ValuationKind ChoreInstance::kind() const {
  return static_cast<ValuationKind>(spec.index());
}

const BinPackingSpec& ChoreInstance::bin_packing() const {
  if (auto* p = std::get_if<BinPackingSpec>(&spec)) return *p;
  throw InvalidInstance("instance is not bin_packing");
}

const JobSchedulingSpec& ChoreInstance::job_scheduling() const {
  if (auto* p = std::get_if<JobSchedulingSpec>(&spec)) return *p;
  throw InvalidInstance("instance is not job_scheduling");
}

const CoveringPlaneSpec& ChoreInstance::covering_plane() const {
  if (auto* p = std::get_if<CoveringPlaneSpec>(&spec)) return *p;
  throw InvalidInstance("instance is not covering_plane");
}

Size ChoreInstance::total_size(int agent, const ItemSet& items) const {
  Size total = 0;
  for (int j : items) total += sizes[agent][j];
  return total;
}

Size ChoreInstance::total_size(int agent) const {
  const auto& row = sizes[agent];
  return std::accumulate(row.begin(), row.end(), Size{0});
}

namespace {

std::optional<std::string> validate_sizes(const ChoreInstance& inst) {
  if (static_cast<int>(inst.sizes.size()) != inst.n)
    return "size matrix has " + std::to_string(inst.sizes.size()) + " rows, expected n = " +
           std::to_string(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    const auto& row = inst.sizes[i];
    if (static_cast<int>(row.size()) != inst.m)
      return "size row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
             " entries, expected m = " + std::to_string(inst.m);
    for (Size s : row)
      if (s < 0) return "negative size for agent " + std::to_string(i + 1);
  }
  return std::nullopt;
}

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

std::optional<std::string> validate_instance(const ChoreInstance& inst) {
  if (inst.n < 1) return "agent count must be at least 1";
  if (inst.m < 0) return "item count must be nonnegative";

  switch (inst.kind()) {
    case ValuationKind::BinPacking: {
      if (auto v = validate_sizes(inst)) return v;
      const auto& caps = inst.bin_packing().capacities;
      if (static_cast<int>(caps.size()) != inst.n) return "capacity count differs from n";
      for (int i = 0; i < inst.n; ++i) {
        if (caps[i] <= 0) return "capacity must be positive";
        if (inst.m > 0 &&
            caps[i] < *std::max_element(inst.sizes[i].begin(), inst.sizes[i].end()))
          return "capacity below max item size";
      }
      break;
    }
    case ValuationKind::JobScheduling: {
      if (auto v = validate_sizes(inst)) return v;
      const auto& speeds = inst.job_scheduling().speeds;
      if (static_cast<int>(speeds.size()) != inst.n) return "speed row count differs from n";
      for (const auto& row : speeds) {
        if (row.empty()) return "every agent needs at least one machine";
        for (Size rho : row)
          if (rho <= 0) return "speeds must be positive";
        if (!std::is_sorted(row.begin(), row.end(), std::greater<>()))
          return "speeds must be nonincreasing";
      }
      break;
    }
    case ValuationKind::CoveringPlane: {
      const auto& cp = inst.covering_plane();
      if (cp.dimension != inst.n) return "covering-plane dimension differs from n";
      if (!inst.sizes.empty()) return "covering-plane instances carry no size matrix";
      if (inst.n > 6) return "covering-plane dimension too large";
      const std::int64_t expected = int_pow(inst.n, inst.n);
      if (inst.m != expected || static_cast<std::int64_t>(cp.points.size()) != expected)
        return "point count differs from n^n";
      std::vector<char> seen(static_cast<std::size_t>(expected), 0);
      for (const auto& p : cp.points) {
        if (static_cast<int>(p.size()) != inst.n) return "point has wrong dimension";
        std::int64_t code = 0;
        for (int x : p) {
          if (x < 1 || x > inst.n) return "coordinate outside [n]";
          code = code * inst.n + (x - 1);
        }
        if (seen[code]) return "duplicate point";
        seen[code] = 1;
      }
      break;
    }
    case ValuationKind::Additive:
      if (auto v = validate_sizes(inst)) return v;
      break;
  }
  return std::nullopt;
}

void require_valid(const ChoreInstance& inst) {
  if (auto v = validate_instance(inst)) throw InvalidInstance(*v);
}

bool is_ido(const ChoreInstance& inst) {
  if (!inst.has_sizes()) throw InvalidInstance("covering-plane instances have no size order");
  for (const auto& row : inst.sizes)
    if (!std::is_sorted(row.begin(), row.end(), std::greater<>())) return false;
  return true;
}

std::optional<std::string> check_partition(const Allocation& alloc, int n, int m) {
  if (static_cast<int>(alloc.bundles.size()) != n)
    return "allocation has " + std::to_string(alloc.bundles.size()) + " bundles, expected " +
           std::to_string(n);
  std::vector<char> owned(static_cast<std::size_t>(m), 0);
  for (const auto& bundle : alloc.bundles) {
    for (int j : bundle) {
      if (j < 0 || j >= m) return "item index " + std::to_string(j + 1) + " out of range";
      if (owned[j]) return "item " + std::to_string(j + 1) + " allocated twice";
      owned[j] = 1;
    }
  }
  for (int j = 0; j < m; ++j)
    if (!owned[j]) return "item " + std::to_string(j + 1) + " unallocated";
  return std::nullopt;
}

void require_partition(const Allocation& alloc, int n, int m) {
  if (auto v = check_partition(alloc, n, m)) throw InvalidAllocation(*v);
}

Allocation normalized(Allocation alloc) {
  for (auto& b : alloc.bundles) std::sort(b.begin(), b.end());
  return alloc;
}

}  // namespace chores
