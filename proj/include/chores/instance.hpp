#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chores {

using Size = std::int64_t;
using SizeMatrix = std::vector<std::vector<Size>>;

// Item indices are 0-based in memory and 1-based in every file and report.
using ItemSet = std::vector<int>;

enum class ValuationKind { BinPacking, JobScheduling, CoveringPlane, Additive };

std::string_view kind_name(ValuationKind kind);
ValuationKind parse_kind(std::string_view name);

struct BinPackingSpec {
  std::vector<Size> capacities;

  bool operator==(const BinPackingSpec&) const = default;
};

// speeds[i] is nonincreasing; speeds[i].size() is agent i's machine count.
struct JobSchedulingSpec {
  std::vector<std::vector<Size>> speeds;

  bool operator==(const JobSchedulingSpec&) const = default;
};

// One item per point of [n]^n; coordinates are 1-based.
struct CoveringPlaneSpec {
  int dimension = 0;
  std::vector<std::vector<int>> points;

  bool operator==(const CoveringPlaneSpec&) const = default;
};

struct AdditiveSpec {
  bool operator==(const AdditiveSpec&) const = default;
};

using ValuationSpec =
    std::variant<BinPackingSpec, JobSchedulingSpec, CoveringPlaneSpec, AdditiveSpec>;

// A chore allocation problem. Covering-plane instances carry no size matrix.
struct ChoreInstance {
  int n = 0;
  int m = 0;
  SizeMatrix sizes;
  ValuationSpec spec;

  ValuationKind kind() const;
  bool has_sizes() const { return kind() != ValuationKind::CoveringPlane; }

  const BinPackingSpec& bin_packing() const;
  const JobSchedulingSpec& job_scheduling() const;
  const CoveringPlaneSpec& covering_plane() const;

  // s_i(S); requires a size matrix.
  Size total_size(int agent, const ItemSet& items) const;
  Size total_size(int agent) const;

  bool operator==(const ChoreInstance&) const = default;
};

// An ordered n-partition of the items; empty bundles are allowed.
struct Allocation {
  std::vector<ItemSet> bundles;

  bool operator==(const Allocation&) const = default;
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAllocation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Returns the first violated invariant, or nullopt when the instance is valid.
std::optional<std::string> validate_instance(const ChoreInstance& inst);

// Throws InvalidInstance with the violation message.
void require_valid(const ChoreInstance& inst);

// True iff every agent's size row is nonincreasing. Throws InvalidInstance for
// covering-plane instances, which have no sizes.
bool is_ido(const ChoreInstance& inst);

// Bundles pairwise disjoint, union [m], exactly n bundles.
std::optional<std::string> check_partition(const Allocation& alloc, int n, int m);
void require_partition(const Allocation& alloc, int n, int m);

// Bundles with sorted item lists.
Allocation normalized(Allocation alloc);

}  // namespace chores
