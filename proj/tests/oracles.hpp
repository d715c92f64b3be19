#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the instance types and are only usable on tiny inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "chores/instance.hpp"
#include "chores/rational.hpp"

namespace oracle {

using chores::ChoreInstance;
using chores::ItemSet;
using chores::Rational;
using chores::Size;

// Calls f(assignment) for every map of `count` items into `k` labels.
template <typename F>
void for_each_assignment(int count, int k, F&& f) {
  std::vector<int> a(count, 0);
  for (;;) {
    f(a);
    int j = 0;
    while (j < count && ++a[j] == k) a[j++] = 0;
    if (j == count) return;
  }
}

// Subset DP: bins(S) = 1 + min over fitting T containing min(S) of bins(S \ T).
inline int min_bins(const std::vector<Size>& sizes, Size capacity) {
  const int count = static_cast<int>(sizes.size());
  const std::uint32_t full = (1u << count) - 1;
  std::vector<Size> sum(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int low = __builtin_ctz(mask);
    sum[mask] = sum[mask & (mask - 1)] + sizes[low];
  }
  const int infinite = count + 1;
  std::vector<int> bins(full + 1, infinite);
  bins[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask)
      if ((sub & low) && sum[sub] <= capacity && bins[mask ^ sub] + 1 < bins[mask])
        bins[mask] = bins[mask ^ sub] + 1;
  }
  return bins[full] == infinite ? -1 : bins[full];
}

inline Rational min_makespan(const std::vector<Size>& sizes, const std::vector<Size>& speeds) {
  const int count = static_cast<int>(sizes.size());
  const int k = static_cast<int>(speeds.size());
  Rational best = -1;
  for_each_assignment(count, k, [&](const std::vector<int>& a) {
    std::vector<Size> load(k, 0);
    for (int j = 0; j < count; ++j) load[a[j]] += sizes[j];
    Rational span = 0;
    for (int l = 0; l < k; ++l) span = std::max(span, chores::make_rational(load[l], speeds[l]));
    if (best < 0 || span < best) best = span;
  });
  return best;
}

// Fewest planes C_{agent,l} whose union contains every point of the set.
inline int min_plane_cover(const ChoreInstance& inst, int agent, const ItemSet& items) {
  const auto& points = inst.covering_plane().points;
  const int n = inst.covering_plane().dimension;
  int best = n + 1;
  for (unsigned labels = 0; labels < (1u << n); ++labels) {
    bool covers = std::all_of(items.begin(), items.end(), [&](int j) {
      return (labels >> (points[j][agent] - 1)) & 1u;
    });
    if (covers) best = std::min(best, __builtin_popcount(labels));
  }
  return best;
}

inline Rational value(const ChoreInstance& inst, int agent, const ItemSet& items) {
  std::vector<Size> sizes;
  if (inst.has_sizes())
    for (int j : items) sizes.push_back(inst.sizes[agent][j]);
  switch (inst.kind()) {
    case chores::ValuationKind::BinPacking:
      return Rational(min_bins(sizes, inst.bin_packing().capacities[agent]));
    case chores::ValuationKind::JobScheduling:
      return min_makespan(sizes, inst.job_scheduling().speeds[agent]);
    case chores::ValuationKind::CoveringPlane:
      return Rational(min_plane_cover(inst, agent, items));
    case chores::ValuationKind::Additive: {
      Size total = 0;
      for (Size s : sizes) total += s;
      return Rational(total);
    }
  }
  return Rational(-1);
}

// Memoized brute-force value by item bitmask.
class Values {
 public:
  Values(const ChoreInstance& inst, int agent) : inst_(inst), agent_(agent) {}

  const Rational& operator()(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    ItemSet items;
    for (int j = 0; j < inst_.m; ++j)
      if ((mask >> j) & 1u) items.push_back(j);
    return memo_.emplace(mask, value(inst_, agent_, items)).first->second;
  }

 private:
  const ChoreInstance& inst_;
  int agent_;
  std::map<std::uint64_t, Rational> memo_;
};

// min over all n^m assignments of the max bundle value.
inline Rational mms(const ChoreInstance& inst, int agent) {
  Values v(inst, agent);
  Rational best = -1;
  for_each_assignment(inst.m, inst.n, [&](const std::vector<int>& a) {
    std::vector<std::uint64_t> masks(inst.n, 0);
    for (int j = 0; j < inst.m; ++j) masks[a[j]] |= std::uint64_t{1} << j;
    Rational worst = 0;
    for (auto mask : masks) worst = std::max(worst, v(mask));
    if (best < 0 || worst < best) best = worst;
  });
  return best;
}

// ---------------------------------------------------------------------------
// Seeded instance generators for tests.
// ---------------------------------------------------------------------------

inline Size uniform(std::mt19937_64& rng, Size lo, Size hi) {
  return std::uniform_int_distribution<Size>(lo, hi)(rng);
}

inline ChoreInstance bin_instance(std::mt19937_64& rng, int n, int m, Size max_capacity) {
  ChoreInstance inst;
  inst.n = n;
  inst.m = m;
  chores::BinPackingSpec spec;
  for (int i = 0; i < n; ++i) {
    Size c = uniform(rng, 1, max_capacity);
    spec.capacities.push_back(c);
    std::vector<Size> row(m);
    for (auto& s : row) s = uniform(rng, 1, c);
    inst.sizes.push_back(row);
  }
  inst.spec = spec;
  return inst;
}

inline ChoreInstance job_instance(std::mt19937_64& rng, int n, int m, int max_machines,
                                  Size max_speed, Size max_size) {
  ChoreInstance inst;
  inst.n = n;
  inst.m = m;
  chores::JobSchedulingSpec spec;
  for (int i = 0; i < n; ++i) {
    std::vector<Size> speeds(uniform(rng, 1, max_machines));
    for (auto& r : speeds) r = uniform(rng, 1, max_speed);
    std::sort(speeds.rbegin(), speeds.rend());
    spec.speeds.push_back(speeds);
    std::vector<Size> row(m);
    for (auto& s : row) s = uniform(rng, 1, max_size);
    inst.sizes.push_back(row);
  }
  inst.spec = spec;
  return inst;
}

inline ChoreInstance additive_instance(std::mt19937_64& rng, int n, int m, Size max_size) {
  ChoreInstance inst;
  inst.n = n;
  inst.m = m;
  for (int i = 0; i < n; ++i) {
    std::vector<Size> row(m);
    for (auto& s : row) s = uniform(rng, 0, max_size);
    inst.sizes.push_back(row);
  }
  inst.spec = chores::AdditiveSpec{};
  return inst;
}

inline ChoreInstance covering_instance(int n) {
  ChoreInstance inst;
  inst.n = n;
  chores::CoveringPlaneSpec spec;
  spec.dimension = n;
  int total = 1;
  for (int d = 0; d < n; ++d) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> point(n);
    for (int d = n - 1, c = code; d >= 0; --d, c /= n) point[d] = c % n + 1;
    spec.points.push_back(point);
  }
  inst.m = total;
  inst.spec = spec;
  return inst;
}

inline ItemSet random_subset(std::mt19937_64& rng, int m) {
  ItemSet items;
  for (int j = 0; j < m; ++j)
    if (rng() & 1u) items.push_back(j);
  return items;
}

}  // namespace oracle
