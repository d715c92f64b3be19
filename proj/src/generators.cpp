#include "chores/generators.hpp"

#include <algorithm>
#include <random>

namespace chores {

ChoreInstance gen_covering_planes(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("covering planes: n must be in [2, 4]");
  CoveringPlaneSpec spec;
  spec.dimension = n;
  std::vector<int> point(n, 1);
  for (;;) {
    spec.points.push_back(point);
    int d = n - 1;
    while (d >= 0 && point[d] == n) point[d--] = 1;
    if (d < 0) break;
    ++point[d];
  }
  ChoreInstance inst;
  inst.n = n;
  inst.m = static_cast<int>(spec.points.size());
  inst.spec = std::move(spec);
  return inst;
}

ChoreInstance gen_tight_binpacking() {
  ChoreInstance inst;
  inst.n = 3;
  inst.m = 9;
  inst.sizes = {{6, 15, 22, 26, 10, 7, 12, 19, 12},
                {6, 15, 23, 26, 10, 8, 11, 18, 12},
                {6, 16, 22, 27, 10, 7, 11, 18, 12}};
  inst.spec = BinPackingSpec{{43, 43, 43}};
  return inst;
}

PropxInstances gen_propx_instances(int n) {
  if (n < 1) throw std::invalid_argument("propx instances: n must be positive");
  PropxInstances out;
  out.bin_packing.n = n;
  out.bin_packing.m = n + 1;
  out.bin_packing.sizes.assign(n, std::vector<Size>(n + 1, 1));
  out.bin_packing.spec = BinPackingSpec{std::vector<Size>(n, n + 1)};

  out.job_scheduling.n = 2 * n;
  out.job_scheduling.m = 2 * n + 1;
  out.job_scheduling.sizes.assign(2 * n, std::vector<Size>(2 * n + 1, 1));
  out.job_scheduling.spec =
      JobSchedulingSpec{std::vector<std::vector<Size>>(2 * n, std::vector<Size>(2 * n, 1))};
  return out;
}

namespace {

Size uniform(std::mt19937_64& rng, Size lo, Size hi) {
  return std::uniform_int_distribution<Size>(lo, hi)(rng);
}

}  // namespace

ChoreInstance random_bin_packing(const RandomBinPackingParams& params, std::uint64_t seed) {
  if (params.n < 1 || params.m < 0 || params.max_capacity < 1)
    throw std::invalid_argument("random bin packing: need n >= 1, m >= 0, max capacity >= 1");
  std::mt19937_64 rng(seed);
  ChoreInstance inst;
  inst.n = params.n;
  inst.m = params.m;
  BinPackingSpec spec;
  for (int i = 0; i < params.n; ++i) {
    const Size c = uniform(rng, 1, params.max_capacity);
    spec.capacities.push_back(c);
    std::vector<Size> row(params.m);
    for (auto& s : row) s = uniform(rng, 1, c);
    inst.sizes.push_back(std::move(row));
  }
  inst.spec = std::move(spec);
  return inst;
}

ChoreInstance random_job_scheduling(const RandomJobSchedulingParams& params, std::uint64_t seed) {
  if (params.n < 1 || params.m < 0 || params.max_machines < 1 || params.max_speed < 1 ||
      params.max_size < 1)
    throw std::invalid_argument("random job scheduling: parameters must be positive");
  std::mt19937_64 rng(seed);
  ChoreInstance inst;
  inst.n = params.n;
  inst.m = params.m;
  JobSchedulingSpec spec;
  for (int i = 0; i < params.n; ++i) {
    std::vector<Size> speeds(uniform(rng, 1, params.max_machines));
    for (auto& r : speeds) r = uniform(rng, 1, params.max_speed);
    std::sort(speeds.begin(), speeds.end(), std::greater<>());
    spec.speeds.push_back(std::move(speeds));
    std::vector<Size> row(params.m);
    for (auto& s : row) s = uniform(rng, 1, params.max_size);
    inst.sizes.push_back(std::move(row));
  }
  inst.spec = std::move(spec);
  return inst;
}

}  // namespace chores
