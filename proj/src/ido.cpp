#include "chores/ido.hpp"

#include <algorithm>
#include <numeric>

namespace chores {

IdoReduction to_ido(const ChoreInstance& inst) {
  if (!inst.has_sizes()) throw InvalidInstance("IDO reduction needs a size matrix");
  IdoReduction out{inst, {}};
  out.mapping.order.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    auto& order = out.mapping.order[i];
    order.resize(inst.m);
    std::iota(order.begin(), order.end(), 0);
    const auto& row = inst.sizes[i];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return row[a] > row[b]; });
    for (int j = 0; j < inst.m; ++j) out.instance.sizes[i][j] = row[order[j]];
  }
  return out;
}

Allocation lift_allocation(const ChoreInstance& original, const Allocation& ido_allocation) {
  if (!original.has_sizes()) throw InvalidInstance("IDO lift needs a size matrix");
  require_partition(ido_allocation, original.n, original.m);

  std::vector<int> owner(original.m, -1);
  for (int i = 0; i < original.n; ++i)
    for (int g : ido_allocation.bundles[i]) owner[g] = i;

  std::vector<char> remaining(original.m, 1);
  Allocation lifted{std::vector<ItemSet>(original.n)};
  for (int g = original.m - 1; g >= 0; --g) {
    const int agent = owner[g];
    const auto& row = original.sizes[agent];
    int pick = -1;
    for (int k = 0; k < original.m; ++k)
      if (remaining[k] && (pick < 0 || row[k] < row[pick])) pick = k;
    remaining[pick] = 0;
    lifted.bundles[agent].push_back(pick);
  }
  return normalized(std::move(lifted));
}

}  // namespace chores
