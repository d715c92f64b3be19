#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chores/instance.hpp"
#include "chores/rational.hpp"
#include "chores/valuation.hpp"

namespace chores {

using Mask = std::uint64_t;

ItemSet items_of(Mask mask);
Mask mask_of(const ItemSet& items);

// Memoized v_i(S) keyed by item bitmask, for instances with at most 62 items.
// Small instances get dense tables: subset sums come from the SIMD kernels and
// single-bin sets of a bin-packing agent are resolved without search.
class SubsetValueCache {
 public:
  static constexpr int kMaxItems = 62;
  static constexpr int kDenseItems = 20;

  SubsetValueCache(const ChoreInstance& inst, int agent, const OracleBudget& budget = {});

  // Exact value; throws BudgetExceeded like value_exact.
  const Rational& value(Mask mask);

  // s_i(S); requires a size matrix.
  Size total_size(Mask mask) const;

  int agent() const { return agent_; }

 private:
  Rational compute(Mask mask) const;

  const ChoreInstance& inst_;
  int agent_;
  OracleBudget budget_;
  bool dense_ = false;
  std::vector<std::int64_t> sums_;
  std::vector<std::uint8_t> fits_one_bin_;
  std::vector<Rational> table_;
  std::vector<std::uint8_t> known_;
  std::unordered_map<Mask, Rational> sparse_;
};

}  // namespace chores
