#include "chores/subset_cache.hpp"

#include <bit>
#include <set>

#include "chores/kernels.hpp"

namespace chores {

ItemSet items_of(Mask mask) {
  ItemSet items;
  while (mask != 0) {
    items.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return items;
}

Mask mask_of(const ItemSet& items) {
  Mask mask = 0;
  for (int j : items) mask |= Mask{1} << j;
  return mask;
}

SubsetValueCache::SubsetValueCache(const ChoreInstance& inst, int agent,
                                   const OracleBudget& budget)
    : inst_(inst), agent_(agent), budget_(budget) {
  if (inst.m > kMaxItems) throw BudgetExceeded("subset cache supports at most 62 items");
  if (agent < 0 || agent >= inst.n) throw std::out_of_range("agent index out of range");
  dense_ = inst.m <= kDenseItems;
  if (!dense_) return;
  const std::size_t count = std::size_t{1} << inst.m;
  table_.resize(count);
  known_.assign(count, 0);
  if (inst.has_sizes()) {
    sums_ = simd::subset_sums(inst.sizes[agent]);
    if (inst.kind() == ValuationKind::BinPacking) {
      fits_one_bin_.resize(count);
      simd::mark_at_most(sums_, inst.bin_packing().capacities[agent], fits_one_bin_);
    }
  }
}

Size SubsetValueCache::total_size(Mask mask) const {
  if (!sums_.empty()) return sums_[mask];
  Size total = 0;
  for (int j : items_of(mask)) total += inst_.sizes[agent_][j];
  return total;
}

Rational SubsetValueCache::compute(Mask mask) const {
  if (mask == 0) return Rational(0);
  switch (inst_.kind()) {
    case ValuationKind::Additive: return Rational(total_size(mask));
    case ValuationKind::CoveringPlane: {
      const auto& points = inst_.covering_plane().points;
      std::set<int> planes;
      for (int j : items_of(mask)) planes.insert(points[j][agent_]);
      return Rational(static_cast<long long>(planes.size()));
    }
    case ValuationKind::BinPacking:
      if (!fits_one_bin_.empty() && fits_one_bin_[mask]) return Rational(1);
      break;
    case ValuationKind::JobScheduling: {
      const auto& speeds = inst_.job_scheduling().speeds[agent_];
      if (speeds.size() == 1) return make_rational(total_size(mask), speeds[0]);
      break;
    }
  }
  return value_exact(inst_, agent_, items_of(mask), budget_).value;
}

const Rational& SubsetValueCache::value(Mask mask) {
  if (dense_) {
    if (!known_[mask]) {
      table_[mask] = compute(mask);
      known_[mask] = 1;
    }
    return table_[mask];
  }
  auto it = sparse_.find(mask);
  if (it == sparse_.end()) it = sparse_.emplace(mask, compute(mask)).first;
  return it->second;
}

}  // namespace chores
