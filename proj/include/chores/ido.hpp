#pragma once

#include <vector>

#include "chores/instance.hpp"

namespace chores {

// order[i][r] is the original item holding agent i's r-th largest size
// (stable: ties keep original index order).
struct IdoMapping {
  std::vector<std::vector<int>> order;
};

struct IdoReduction {
  ChoreInstance instance;
  IdoMapping mapping;
};

// Identical-ordering instance: agent i's j-th size is her j-th largest original
// size. Capacities and speeds are copied unchanged.
IdoReduction to_ido(const ChoreInstance& inst);

// Maps an allocation of the IDO instance back to the original items. IDO items
// are visited from smallest to largest; the owner of each takes her smallest
// remaining original item (ties: lowest index). Every agent's lifted bundle is
// item-wise dominated by her IDO bundle.
Allocation lift_allocation(const ChoreInstance& original, const Allocation& ido_allocation);

}  // namespace chores
