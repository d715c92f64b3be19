#pragma once

// Seeded property checks shared by the unit suite and the acceptance runner.
// Each returns the number of violations found.

#include <numeric>
#include <random>
#include <string>

#include "chores/allocators.hpp"
#include "chores/generators.hpp"
#include "chores/ido.hpp"
#include "chores/valuation.hpp"
#include "oracles.hpp"

namespace props {

using namespace chores;

inline ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// A random instance of every class, small enough for exact values on any subset.
inline std::vector<ChoreInstance> sample_instances(std::mt19937_64& rng) {
  return {oracle::bin_instance(rng, 2, 10, 30), oracle::job_instance(rng, 2, 9, 3, 5, 20),
          oracle::additive_instance(rng, 2, 10, 12), gen_covering_planes(3)};
}

// v(S + e) - v(S) >= v(T + e) - v(T) for random S ⊆ T, e ∉ T.
inline int submodularity_violations(const ChoreInstance& inst, int triples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < triples; ++t) {
    const int agent = static_cast<int>(rng() % inst.n);
    const int e = static_cast<int>(rng() % inst.m);
    ItemSet s, big;
    for (int j = 0; j < inst.m; ++j) {
      if (j == e) continue;
      const auto roll = rng() % 3;
      if (roll == 0) s.push_back(j);
      if (roll <= 1) big.push_back(j);
    }
    const auto v = [&](const ItemSet& x) { return value_exact(inst, agent, x).value; };
    const ItemSet se = set_union(s, {e}), te = set_union(big, {e});
    if (v(se) - v(s) < v(te) - v(big)) ++bad;
  }
  return bad;
}

// v(S ∪ T) <= v(S) + v(T) for random pairs.
inline int subadditivity_violations(const ChoreInstance& inst, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < pairs; ++t) {
    const int agent = static_cast<int>(rng() % inst.n);
    const ItemSet a = oracle::random_subset(rng, inst.m), b = oracle::random_subset(rng, inst.m);
    const auto v = [&](const ItemSet& x) { return value_exact(inst, agent, x).value; };
    if (v(set_union(a, b)) > v(a) + v(b)) ++bad;
  }
  return bad;
}

// v(∅) = 0 and S ⊆ T ⇒ v(S) <= v(T), for exact and heuristic oracles.
inline int monotonicity_violations(const ChoreInstance& inst, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int i = 0; i < inst.n; ++i)
    if (value_exact(inst, i, {}).value != 0 || value_upper_heuristic(inst, i, {}).value != 0) ++bad;
  for (int t = 0; t < pairs; ++t) {
    const int agent = static_cast<int>(rng() % inst.n);
    const ItemSet big = oracle::random_subset(rng, inst.m);
    ItemSet small;
    for (int j : big)
      if (rng() & 1u) small.push_back(j);
    if (value_exact(inst, agent, small).value > value_exact(inst, agent, big).value) ++bad;
  }
  return bad;
}

// First-fit decreasing and LPT never report less than the exact value.
inline int heuristic_violations(int sets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < sets; ++t) {
    const ChoreInstance inst = t % 2 ? oracle::bin_instance(rng, 1, 12, 40)
                                     : oracle::job_instance(rng, 1, 10, 3, 5, 20);
    const ItemSet items = oracle::random_subset(rng, inst.m);
    const Valuation exact = value_exact(inst, 0, items);
    const Valuation heuristic = value_upper_heuristic(inst, 0, items);
    if (heuristic.value < exact.value) ++bad;
    if (certificate_value(inst, 0, items, heuristic.certificate) != heuristic.value) ++bad;
    if (certificate_value(inst, 0, items, exact.certificate) != exact.value) ++bad;
  }
  return bad;
}

// Every allocator returns an n-partition of [m] on random inputs.
inline int partition_violations(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 11);
    const ChoreInstance bins = oracle::bin_instance(rng, n, m, 50);
    const ChoreInstance jobs = oracle::job_instance(rng, n, m, 3, 5, 20);
    for (auto a : {AllocatorKind::BagFill, AllocatorKind::BagFill32, AllocatorKind::AllOrNothing})
      if (check_partition(solve(bins, a).allocation, n, m)) ++bad;
    for (auto a : {AllocatorKind::RoundRobin, AllocatorKind::ThresholdSearch, AllocatorKind::AllOrNothing})
      if (check_partition(solve(jobs, a).allocation, n, m)) ++bad;
  }
  return bad;
}

}  // namespace props
