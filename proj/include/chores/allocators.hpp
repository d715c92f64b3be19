#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chores/instance.hpp"
#include "chores/rational.hpp"
#include "chores/valuation.hpp"

namespace chores {

// ---------------------------------------------------------------------------
// Bin packing: bag filling.
//
// Items are split into groups of n by IDO rank. Each round seeds a bag with the
// largest remaining item of every group up to the last one still holding an
// item that is large (> c_i / 2) for some remaining agent, then lets agents who
// still see the bag as light (n * s_i(B) <= s_i(M)) add their small items. The
// bag goes to the last agent who added an item, or, if nobody did, to an agent
// who sees every bag item as large. The final agent takes the rest.
// ---------------------------------------------------------------------------

enum class SmallItemPick {
  Largest,   // 2-MMS variant
  Smallest,  // ceil(3/2 MMS) variant
};

enum class BagOutcome {
  Initialized,  // handed out right after seeding
  Filled,       // handed to the agent who added the last item
  Last,         // remaining items for the final agent
};

struct BagRound {
  int recipient = -1;
  ItemSet bag;
  BagOutcome outcome = BagOutcome::Last;
};

struct BagFillTrace {
  Allocation allocation;
  std::vector<BagRound> rounds;
};

// Requires an IDO bin-packing instance; throws InvalidInstance otherwise.
BagFillTrace bag_fill_trace(const ChoreInstance& ido, SmallItemPick pick);

Allocation bag_fill_allocate(const ChoreInstance& ido);
Allocation bag_fill_allocate_v2(const ChoreInstance& ido);

// Packing of one agent's bundle through passable sets: large items seed one set
// each, small items fill sets until adding one overflows the capacity (the set
// is then passable: dropping that item makes it fit). Dropped items are
// first-fit into the resulting bins and otherwise paired, so q sets need at most
// ceil(3q/2) bins. Every choice of the item placed last is tried and the
// smallest packing kept.
struct PassablePacking {
  PackingCertificate certificate;
  int set_count = 0;
  int passable_count = 0;
};

// With `max_large` set, a bundle holding more large items than that is a
// precondition violation (InvalidAllocation).
PassablePacking passable_set_packing(const ChoreInstance& inst, int agent, const ItemSet& bundle,
                                     std::optional<long long> max_large = std::nullopt);

// ---------------------------------------------------------------------------
// Job scheduling.
// ---------------------------------------------------------------------------

// Agents take turns picking the largest remaining job; on an IDO instance item
// j goes to agent j mod n.
Allocation round_robin_allocate(const ChoreInstance& ido);

// Machine l gets capacity tau * rho_l and absorbs jobs in order while its load
// stays within twice that capacity. Positions refer to the input job span.
struct ThresholdSchedule {
  Rational tau;
  std::vector<std::vector<int>> machines;
  std::vector<Size> loads;
  std::vector<int> leftover;
};

ThresholdSchedule threshold_schedule(std::span<const Size> jobs, std::span<const Size> speeds,
                                     const Rational& tau);

struct ThresholdSearchResult {
  Rational tau;
  ThresholdSchedule schedule;
  int iterations = 0;
};

// Starts at max job / fastest speed and multiplies the threshold by (1 + delta)
// until nothing is left over.
ThresholdSearchResult threshold_search_schedule(std::span<const Size> jobs,
                                                std::span<const Size> speeds,
                                                const Rational& delta = Rational(1, 10));

struct AgentThresholdSchedule {
  ThresholdSearchResult search;
  ScheduleCertificate certificate;
};

// threshold_search_schedule on an agent's bundle, sorted by her sizes.
AgentThresholdSchedule threshold_schedule_bundle(const ChoreInstance& inst, int agent,
                                                 const ItemSet& bundle,
                                                 const Rational& delta = Rational(1, 10));

// ---------------------------------------------------------------------------

// Everything to the agent with the smallest v_i(M) (lowest index on ties).
Allocation all_or_nothing_allocate(const ChoreInstance& inst, const OracleBudget& budget = {});

// ---------------------------------------------------------------------------
// Dispatch by name.
// ---------------------------------------------------------------------------

enum class AllocatorKind { BagFill, BagFill32, RoundRobin, ThresholdSearch, AllOrNothing };

std::string_view allocator_name(AllocatorKind kind);
AllocatorKind parse_allocator(std::string_view name);
bool allocator_supports(AllocatorKind allocator, ValuationKind valuation);

class IncompatibleAllocator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveOptions {
  Rational delta{1, 10};
  OracleBudget budget;
};

struct AgentCertificate {
  Valuation valuation;
  std::optional<Rational> tau;  // threshold-search only
  int iterations = 0;
};

struct SolveResult {
  AllocatorKind allocator = AllocatorKind::AllOrNothing;
  Allocation allocation;
  bool ido_round_trip = false;
  std::vector<AgentCertificate> certificates;
};

// Runs an allocator; non-IDO inputs to IDO allocators go through to_ido and
// lift_allocation.
SolveResult solve(const ChoreInstance& inst, AllocatorKind allocator,
                  const SolveOptions& options = {});

}  // namespace chores
