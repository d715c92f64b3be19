#include <bit>
#include <memory>
#include <random>
#include <sstream>

#include "chores/audit.hpp"
#include "chores/subset_cache.hpp"

namespace chores {

namespace {

std::uint64_t allocation_count(int n, int m, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (int j = 0; j < m; ++j) {
    if (count > cap / static_cast<std::uint64_t>(n)) return cap + 1;
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

// Per-agent values of bundles given as item lists; masks and a memo table when
// the instance is small enough.
class BundleValuer {
 public:
  BundleValuer(const ChoreInstance& inst, const OracleBudget& budget)
      : inst_(inst), budget_(budget) {
    if (inst.m <= SubsetValueCache::kMaxItems && inst.kind() != ValuationKind::CoveringPlane)
      for (int i = 0; i < inst.n; ++i)
        caches_.push_back(std::make_unique<SubsetValueCache>(inst, i, budget));
  }

  bool uses_masks() const { return !caches_.empty(); }

  Rational value(int agent, Mask mask) { return caches_[agent]->value(mask); }

  Rational value(int agent, const ItemSet& items) const {
    if (inst_.kind() == ValuationKind::CoveringPlane) {
      const auto& points = inst_.covering_plane().points;
      std::uint32_t planes = 0;
      for (int j : items) planes |= 1u << points[j][agent];
      return Rational(std::popcount(planes));
    }
    return value_exact(inst_, agent, items, budget_).value;
  }

 private:
  const ChoreInstance& inst_;
  OracleBudget budget_;
  std::vector<std::unique_ptr<SubsetValueCache>> caches_;
};

struct Fold {
  const std::vector<Rational>& mms;
  const Rational& target;
  LowerBoundCertificate& out;
  bool first = true;

  void visit(const std::vector<Rational>& values, const std::vector<int>& assignment, int n) {
    Ratio worst{Rational(0), false};
    for (int i = 0; i < n; ++i) {
      Ratio r = Ratio::of(values[i], mms[i]);
      if (worst < r) worst = r;
    }
    ++out.allocations_checked;
    if (first || worst < out.min_max_ratio) {
      out.min_max_ratio = worst;
      out.best_allocation = to_allocation(assignment, n);
      first = false;
    }
    if (!out.counterexample && !worst.at_least(target))
      out.counterexample = to_allocation(assignment, n);
  }

  static Allocation to_allocation(const std::vector<int>& assignment, int n) {
    Allocation alloc{std::vector<ItemSet>(n)};
    for (std::size_t j = 0; j < assignment.size(); ++j)
      alloc.bundles[assignment[j]].push_back(static_cast<int>(j));
    return alloc;
  }
};

void run_exhaustive(const ChoreInstance& inst, BundleValuer& valuer, Fold& fold) {
  const int n = inst.n;
  std::vector<int> assignment(inst.m, 0);
  std::vector<Rational> values(n);

  if (valuer.uses_masks()) {
    std::vector<Mask> masks(n, 0);
    masks[0] = inst.m == 64 ? ~Mask{0} : (Mask{1} << inst.m) - 1;
    for (;;) {
      for (int i = 0; i < n; ++i) values[i] = valuer.value(i, masks[i]);
      fold.visit(values, assignment, n);
      int j = 0;
      for (; j < inst.m; ++j) {
        masks[assignment[j]] &= ~(Mask{1} << j);
        assignment[j] = (assignment[j] + 1) % n;
        masks[assignment[j]] |= Mask{1} << j;
        if (assignment[j] != 0) break;
      }
      if (j == inst.m) return;
    }
  }

  for (;;) {
    std::vector<ItemSet> bundles(n);
    for (int j = 0; j < inst.m; ++j) bundles[assignment[j]].push_back(j);
    for (int i = 0; i < n; ++i) values[i] = valuer.value(i, bundles[i]);
    fold.visit(values, assignment, n);
    int j = 0;
    for (; j < inst.m; ++j) {
      assignment[j] = (assignment[j] + 1) % n;
      if (assignment[j] != 0) break;
    }
    if (j == inst.m) return;
  }
}

void run_sampled(const ChoreInstance& inst, BundleValuer& valuer, Fold& fold,
                 std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, inst.n - 1);
  std::vector<int> assignment(inst.m);
  std::vector<Rational> values(inst.n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int& a : assignment) a = pick(rng);
    if (valuer.uses_masks()) {
      std::vector<Mask> masks(inst.n, 0);
      for (int j = 0; j < inst.m; ++j) masks[assignment[j]] |= Mask{1} << j;
      for (int i = 0; i < inst.n; ++i) values[i] = valuer.value(i, masks[i]);
    } else {
      std::vector<ItemSet> bundles(inst.n);
      for (int j = 0; j < inst.m; ++j) bundles[assignment[j]].push_back(j);
      for (int i = 0; i < inst.n; ++i) values[i] = valuer.value(i, bundles[i]);
    }
    fold.visit(values, assignment, inst.n);
  }
}

}  // namespace

LowerBoundCertificate certify_lower_bound(const ChoreInstance& inst, const Rational& target,
                                          const CertifyOptions& options) {
  require_valid(inst);
  LowerBoundCertificate out;
  out.mode = options.mode;
  out.target = target;

  if (options.mode == CertifyMode::Exhaustive &&
      allocation_count(inst.n, inst.m, options.max_allocations) > options.max_allocations)
    throw BudgetExceeded(std::to_string(inst.n) + "^" + std::to_string(inst.m) +
                         " allocations exceed the exhaustive limit of " +
                         std::to_string(options.max_allocations) + "; use sampled mode");

  for (int i = 0; i < inst.n; ++i) out.mms.push_back(mms_exact(inst, i, options.budget).value);

  BundleValuer valuer(inst, options.budget);
  Fold fold{out.mms, target, out};
  std::ostringstream statement;
  if (options.mode == CertifyMode::Exhaustive) {
    run_exhaustive(inst, valuer, fold);
    out.certified = !out.counterexample.has_value();
    if (out.certified)
      statement << "certified: all " << out.allocations_checked
                << " allocations give some agent ratio >= " << format_value(target)
                << "; the best allocation reaches " << out.min_max_ratio.fraction();
    else
      statement << "refuted: an allocation keeps every agent below ratio " << format_value(target)
                << "; the best allocation reaches " << out.min_max_ratio.fraction();
  } else {
    out.seed = options.seed;
    run_sampled(inst, valuer, fold, options.trials, options.seed);
    out.certified = !out.counterexample.has_value();
    if (out.certified)
      statement << "evidence only: " << out.allocations_checked
                << " uniformly sampled allocations (seed " << options.seed
                << ") all give some agent ratio >= " << format_value(target)
                << "; unsampled allocations were not checked";
    else
      statement << "refuted: sampled allocation (seed " << options.seed
                << ") keeps every agent below ratio " << format_value(target);
  }
  out.statement = statement.str();
  return out;
}

std::optional<std::vector<int>> uncovered_point(const ChoreInstance& inst, const Allocation& alloc) {
  const auto& spec = inst.covering_plane();
  if (static_cast<int>(alloc.bundles.size()) != inst.n)
    throw InvalidAllocation("allocation needs one bundle per agent");
  const int n = inst.n;
  std::vector<int> point(n);
  for (int i = 0; i < n; ++i) {
    std::vector<char> used(n + 1, 0);
    for (int j : alloc.bundles[i]) used[spec.points[j][i]] = 1;
    int missing = 0;
    for (int l = 1; l <= n && !missing; ++l)
      if (!used[l]) missing = l;
    if (!missing) return std::nullopt;  // agent i touches all n planes: value n
    point[i] = missing;
  }
  // Agent i never holds a point with i-th coordinate l_i, so this point is in
  // no bundle.
  for (const auto& bundle : alloc.bundles)
    for (int j : bundle)
      if (spec.points[j] == point)
        throw std::logic_error("covering-plane witness point found in a bundle");
  return point;
}

}  // namespace chores
