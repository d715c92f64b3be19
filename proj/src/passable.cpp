#include <algorithm>

#include "chores/allocators.hpp"

namespace chores {

namespace {

struct Arrangement {
  std::vector<ItemSet> sets;
  std::vector<int> dropped;  // per set: the item whose removal makes it fit, or -1
};

class PassableBuilder {
 public:
  PassableBuilder(const std::vector<Size>& row, Size capacity) : row_(row), capacity_(capacity) {}

  bool large(int item) const { return 2 * row_[item] > capacity_; }

  // `order` lists the small items in the sequence they are filled in.
  Arrangement arrange(const ItemSet& large_items, const std::vector<int>& order) const {
    Arrangement out;
    std::vector<Size> load;
    for (int j : large_items) {
      out.sets.push_back({j});
      out.dropped.push_back(-1);
      load.push_back(row_[j]);
    }
    std::size_t cursor = 0;
    for (int y : order) {
      if (cursor == out.sets.size()) {
        out.sets.emplace_back();
        out.dropped.push_back(-1);
        load.push_back(0);
      }
      out.sets[cursor].push_back(y);
      load[cursor] += row_[y];
      if (load[cursor] > capacity_) {
        out.dropped[cursor] = y;
        ++cursor;
      }
    }
    return out;
  }

  std::vector<ItemSet> to_bins(const Arrangement& arrangement) const {
    std::vector<ItemSet> bins;
    std::vector<Size> load;
    std::vector<int> extracted;
    for (std::size_t s = 0; s < arrangement.sets.size(); ++s) {
      ItemSet bin;
      Size total = 0;
      for (int j : arrangement.sets[s]) {
        if (j == arrangement.dropped[s]) continue;
        bin.push_back(j);
        total += row_[j];
      }
      if (arrangement.dropped[s] >= 0) extracted.push_back(arrangement.dropped[s]);
      if (bin.empty()) continue;
      bins.push_back(std::move(bin));
      load.push_back(total);
    }
    // Dropped items are small, so any two share a bin.
    for (int y : extracted) {
      std::size_t b = 0;
      while (b < bins.size() && load[b] + row_[y] > capacity_) ++b;
      if (b == bins.size()) {
        bins.emplace_back();
        load.push_back(0);
      }
      bins[b].push_back(y);
      load[b] += row_[y];
    }
    for (auto& bin : bins) std::sort(bin.begin(), bin.end());
    return bins;
  }

 private:
  const std::vector<Size>& row_;
  Size capacity_;
};

}  // namespace

PassablePacking passable_set_packing(const ChoreInstance& inst, int agent, const ItemSet& bundle,
                                     std::optional<long long> max_large) {
  const Size capacity = inst.bin_packing().capacities[agent];
  const auto& row = inst.sizes[agent];
  PassableBuilder builder(row, capacity);

  auto by_size = [&](int a, int b) { return row[a] != row[b] ? row[a] > row[b] : a < b; };
  ItemSet large_items, small_items;
  for (int j : bundle) (builder.large(j) ? large_items : small_items).push_back(j);
  std::sort(large_items.begin(), large_items.end(), by_size);
  std::sort(small_items.begin(), small_items.end(), by_size);
  if (max_large && static_cast<long long>(large_items.size()) > *max_large)
    throw InvalidAllocation("bundle holds " + std::to_string(large_items.size()) +
                            " large items, more than the allowed " + std::to_string(*max_large));

  PassablePacking best;
  bool have = false;
  // Candidate k places small_items[k] last; k == size keeps the size order.
  for (std::size_t k = 0; k <= small_items.size(); ++k) {
    std::vector<int> order;
    for (std::size_t t = 0; t < small_items.size(); ++t)
      if (t != k) order.push_back(small_items[t]);
    if (k < small_items.size()) order.push_back(small_items[k]);

    Arrangement arrangement = builder.arrange(large_items, order);
    std::vector<ItemSet> bins = builder.to_bins(arrangement);
    if (!have || bins.size() < best.certificate.bins.size()) {
      best.certificate.bins = std::move(bins);
      best.set_count = static_cast<int>(arrangement.sets.size());
      best.passable_count = static_cast<int>(std::count_if(
          arrangement.dropped.begin(), arrangement.dropped.end(), [](int d) { return d >= 0; }));
      have = true;
    }
  }
  return best;
}

}  // namespace chores
