#include <algorithm>

#include "chores/allocators.hpp"

namespace chores {

namespace {

class BagFiller {
 public:
  BagFiller(const ChoreInstance& inst, SmallItemPick pick)
      : inst_(inst), pick_(pick), caps_(inst.bin_packing().capacities),
        remaining_(inst.m, 1) {
    for (int i = 0; i < inst.n; ++i) {
      agents_.push_back(i);
      totals_.push_back(inst.total_size(i));
    }
  }

  BagFillTrace run() {
    BagFillTrace trace;
    trace.allocation.bundles.resize(inst_.n);
    while (agents_.size() > 1) {
      BagRound round = one_round();
      trace.allocation.bundles[round.recipient] = round.bag;
      std::erase(agents_, round.recipient);
      trace.rounds.push_back(std::move(round));
    }
    BagRound last{agents_.front(), {}, BagOutcome::Last};
    for (int j = 0; j < inst_.m; ++j)
      if (remaining_[j]) last.bag.push_back(j);
    trace.allocation.bundles[last.recipient] = last.bag;
    trace.rounds.push_back(std::move(last));
    for (auto& b : trace.allocation.bundles) std::sort(b.begin(), b.end());
    return trace;
  }

 private:
  bool large(int agent, int item) const { return 2 * inst_.sizes[agent][item] > caps_[agent]; }

  bool large_for_someone(int item) const {
    return std::any_of(agents_.begin(), agents_.end(), [&](int i) { return large(i, item); });
  }

  int group_count() const { return (inst_.m + inst_.n - 1) / inst_.n; }
  int group_begin(int t) const { return t * inst_.n; }
  int group_end(int t) const { return std::min(inst_.m, (t + 1) * inst_.n); }

  // n * s_i(B) <= s_i(M), with the original n.
  bool light(int agent, const ItemSet& bag) const {
    return static_cast<Size>(inst_.n) * inst_.total_size(agent, bag) <= totals_[agent];
  }

  int small_item(int agent) const {
    int found = -1;
    for (int j = 0; j < inst_.m; ++j) {
      if (!remaining_[j] || large(agent, j)) continue;
      found = j;
      if (pick_ == SmallItemPick::Largest) break;  // IDO: lowest index is largest
    }
    return found;
  }

  void take(ItemSet& bag, int item) {
    bag.push_back(item);
    remaining_[item] = 0;
  }

  BagRound one_round() {
    int last_group = -1;
    for (int t = group_count() - 1; t >= 0 && last_group < 0; --t)
      for (int j = group_begin(t); j < group_end(t); ++j)
        if (remaining_[j] && large_for_someone(j)) {
          last_group = t;
          break;
        }

    ItemSet bag;
    for (int t = 0; t <= last_group; ++t)
      for (int j = group_begin(t); j < group_end(t); ++j)
        if (remaining_[j]) {
          take(bag, j);
          break;
        }

    std::vector<int> candidates;
    for (int i : agents_)
      if (std::all_of(bag.begin(), bag.end(), [&](int j) { return large(i, j); }))
        candidates.push_back(i);

    int filler = -1;
    for (;;) {
      int eligible = -1;
      int item = -1;
      for (int i : agents_) {
        if (!light(i, bag)) continue;
        item = small_item(i);
        if (item >= 0) {
          eligible = i;
          break;
        }
      }
      if (eligible < 0) break;
      take(bag, item);
      filler = eligible;
    }

    if (filler >= 0) return BagRound{filler, std::move(bag), BagOutcome::Filled};
    if (candidates.empty())
      throw std::logic_error("bag filling: no agent qualifies for an unfilled bag");
    return BagRound{candidates.front(), std::move(bag), BagOutcome::Initialized};
  }

  const ChoreInstance& inst_;
  SmallItemPick pick_;
  const std::vector<Size>& caps_;
  std::vector<char> remaining_;
  std::vector<int> agents_;
  std::vector<Size> totals_;
};

}  // namespace

BagFillTrace bag_fill_trace(const ChoreInstance& ido, SmallItemPick pick) {
  if (ido.kind() != ValuationKind::BinPacking)
    throw InvalidInstance("bag filling needs a bin-packing instance");
  require_valid(ido);
  if (!is_ido(ido)) throw InvalidInstance("bag filling needs an identical-ordering instance");
  return BagFiller(ido, pick).run();
}

Allocation bag_fill_allocate(const ChoreInstance& ido) {
  return bag_fill_trace(ido, SmallItemPick::Largest).allocation;
}

Allocation bag_fill_allocate_v2(const ChoreInstance& ido) {
  return bag_fill_trace(ido, SmallItemPick::Smallest).allocation;
}

}  // namespace chores
