#pragma once

#include <cstdint>

#include "chores/instance.hpp"

namespace chores {

// All points of [n]^n in lexicographic order (last coordinate fastest).
ChoreInstance gen_covering_planes(int n);

// Three agents, nine items, capacity 43.
ChoreInstance gen_tight_binpacking();

struct PropxInstances {
  ChoreInstance bin_packing;     // n agents, n+1 unit items, capacity n+1
  ChoreInstance job_scheduling;  // 2n agents, 2n+1 unit jobs, 2n unit-speed machines each
};

PropxInstances gen_propx_instances(int n);

struct RandomBinPackingParams {
  int n = 3;
  int m = 9;
  Size max_capacity = 50;
};

struct RandomJobSchedulingParams {
  int n = 2;
  int m = 8;
  int max_machines = 3;
  Size max_speed = 5;
  Size max_size = 20;
};

// c_i uniform in [1, max_capacity], s_ij uniform in [1, c_i].
ChoreInstance random_bin_packing(const RandomBinPackingParams& params, std::uint64_t seed);

// k_i uniform in [1, max_machines], speeds in [1, max_speed] (nonincreasing),
// sizes in [1, max_size].
ChoreInstance random_job_scheduling(const RandomJobSchedulingParams& params, std::uint64_t seed);

}  // namespace chores
