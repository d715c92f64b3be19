#pragma once

#include <string_view>
#include <vector>

#include "chores/instance.hpp"
#include "chores/rational.hpp"
#include "chores/valuation.hpp"

namespace chores {

enum class BoundMethod { Lemma1Singleton, Lemma1Average, Lemma2Capacity, Exhaustive };

std::string_view method_name(BoundMethod method);

struct MmsBounds {
  Rational lower;
  Rational upper;
  BoundMethod method = BoundMethod::Lemma1Singleton;  // source of `lower`
  bool upper_exact = true;                            // false when v_i(M) came from FFD/LPT
};

// MMS_i together with an MMS-defining partition witnessing it.
struct MmsEntry {
  Rational value;
  Allocation partition;
};

struct MmsProfile {
  std::vector<MmsEntry> agents;
};

// min over n-partitions of the max bundle value, by restricted-growth-string
// enumeration with incumbent pruning. Throws BudgetExceeded when the partition
// space is over budget and no incumbent already meets the lower bound.
MmsEntry mms_exact(const ChoreInstance& inst, int agent, const OracleBudget& budget = {});

MmsProfile mms_profile(const ChoreInstance& inst, const OracleBudget& budget = {});

// Cheap analytic bounds: singleton and average bounds for subadditive
// valuations, plus ceil(s_i(M) / (n c_i)) for bin packing. Upper is v_i(M).
MmsBounds mms_bounds(const ChoreInstance& inst, int agent, const OracleBudget& budget = {});

MmsBounds bounds_from_exact(const MmsEntry& entry);

}  // namespace chores
