#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chores/instance.hpp"
#include "chores/rational.hpp"

namespace chores {

// Limits of the exhaustive oracles. Callers beyond them get BudgetExceeded and
// fall back to bounds or heuristics; no oracle silently returns an inexact value.
struct OracleBudget {
  int max_items = 14;      // exact packing / scheduling, items per set
  int max_machines = 5;    // exact scheduling, machines per agent
  int mms_max_items = 12;  // partition search, total items
  int mms_max_agents = 4;  // partition search, agents
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bins as item sets; every bin's total size fits the agent's capacity.
struct PackingCertificate {
  std::vector<ItemSet> bins;
};

// machines[l] runs on the agent's l-th fastest machine.
struct ScheduleCertificate {
  std::vector<ItemSet> machines;
  Rational makespan;
};

// Plane labels l (1-based) of C_{i,l} used to cover the set.
struct PlaneCover {
  std::vector<int> planes;
};

// Additive values need no certificate.
using Certificate = std::variant<std::monostate, PackingCertificate, ScheduleCertificate, PlaneCover>;

struct Valuation {
  Rational value;
  Certificate certificate;
  bool exact = true;
};

// Exact v_i(S). Throws BudgetExceeded for packing/scheduling sets above budget.
Valuation value_exact(const ChoreInstance& inst, int agent, const ItemSet& items,
                      const OracleBudget& budget = {});

// First-fit-decreasing bins or LPT makespan; never below the exact value.
// Covering-plane and additive values are cheap and returned exactly.
Valuation value_upper_heuristic(const ChoreInstance& inst, int agent, const ItemSet& items);

// value_exact when within budget, otherwise the heuristic with exact = false.
Valuation value_best_effort(const ChoreInstance& inst, int agent, const ItemSet& items,
                            const OracleBudget& budget = {});

bool exact_within_budget(const ChoreInstance& inst, int agent, std::size_t item_count,
                         const OracleBudget& budget);

// Re-evaluates a certificate against the instance. Throws InvalidAllocation when
// it does not partition the set or breaks a capacity; returns the value it realizes.
Rational certificate_value(const ChoreInstance& inst, int agent, const ItemSet& items,
                           const Certificate& cert);

// Packing and scheduling on plain size lists. Bins and machines hold positions
// into the input span.
struct PackingResult {
  std::vector<std::vector<int>> bins;
  int bin_count() const { return static_cast<int>(bins.size()); }
};

struct ScheduleResult {
  std::vector<std::vector<int>> machines;
  std::vector<Size> loads;
  Rational makespan;
};

PackingResult pack_exact(std::span<const Size> sizes, Size capacity);
PackingResult pack_first_fit_decreasing(std::span<const Size> sizes, Size capacity);
ScheduleResult schedule_exact(std::span<const Size> sizes, std::span<const Size> speeds);
ScheduleResult schedule_lpt(std::span<const Size> sizes, std::span<const Size> speeds);

struct PropertyReport {
  int trials = 0;
  int submodular_violations = 0;
  int subadditive_violations = 0;
  int monotone_violations = 0;
  std::vector<std::string> examples;  // first few violations, human readable
};

// Samples nested S ⊆ T with e ∉ T and random pairs (S, T); counts violations of
// submodularity, subadditivity and monotonicity under value_exact.
PropertyReport check_subadditive_submodular(const ChoreInstance& inst, int agent, int trials,
                                            std::uint64_t seed, const OracleBudget& budget = {});

}  // namespace chores
