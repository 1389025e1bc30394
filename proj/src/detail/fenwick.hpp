#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace polycross::detail {

// Prefix sums over positions 0..size-1.
class Fenwick {
 public:
  Fenwick() = default;
  explicit Fenwick(std::size_t size) : tree_(size + 1, 0) {}

  void reset(std::size_t size) { tree_.assign(size + 1, 0); }

  void add(std::size_t pos, long delta) {
    for (std::size_t k = pos + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += delta;
  }

  // Sum over positions [0, end).
  long prefix(std::size_t end) const {
    long s = 0;
    for (std::size_t k = std::min(end, tree_.size() - 1); k > 0; k -= k & (~k + 1)) s += tree_[k];
    return s;
  }

 private:
  std::vector<long> tree_;
};

// Interval insertion with point stabbing counts over keys 0..size-1.
class StabbingCounter {
 public:
  StabbingCounter() = default;
  explicit StabbingCounter(std::size_t size) : diff_(size + 1) {}

  void reset(std::size_t size) { diff_.reset(size + 1); }

  void insert(std::size_t lo, std::size_t hi) {  // closed [lo, hi]
    if (lo > hi) return;
    diff_.add(lo, 1);
    diff_.add(hi + 1, -1);
  }

  long stab(std::size_t key) const { return diff_.prefix(key + 1); }

 private:
  Fenwick diff_;
};

// Dynamic counting of points (x, y) with x < X and y < Y, for a point set
// fixed in advance (x in 1..x_size). Each point may be toggled on and off.
class DominanceCounter {
 public:
  DominanceCounter(std::size_t x_size, const std::vector<std::pair<std::size_t, std::size_t>>& pts)
      : offset_(x_size + 2, 0) {
    for (const auto& [x, y] : pts) {
      for (std::size_t k = x; k <= x_size; k += k & (~k + 1)) ++offset_[k + 1];
    }
    for (std::size_t k = 1; k < offset_.size(); ++k) offset_[k] += offset_[k - 1];
    ys_.assign(offset_.back(), 0);
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (const auto& [x, y] : pts) {
      for (std::size_t k = x; k <= x_size; k += k & (~k + 1)) ys_[fill[k]++] = y;
    }
    for (std::size_t k = 1; k <= x_size; ++k) {
      std::sort(ys_.begin() + static_cast<std::ptrdiff_t>(offset_[k]),
                ys_.begin() + static_cast<std::ptrdiff_t>(offset_[k + 1]));
    }
    bits_.assign(ys_.size(), 0);
  }

  void add(std::size_t x, std::size_t y, long delta) {
    for (std::size_t k = x; k + 1 < offset_.size(); k += k & (~k + 1)) {
      const std::size_t base = offset_[k];
      const std::size_t len = offset_[k + 1] - base;
      const std::size_t pos = locate(k, y);
      for (std::size_t t = pos + 1; t <= len; t += t & (~t + 1)) bits_[base + t - 1] += delta;
    }
  }

  long count_less(std::size_t x, std::size_t y) const {
    long s = 0;
    for (std::size_t k = std::min(x - 1, offset_.size() - 2); k > 0; k -= k & (~k + 1)) {
      const std::size_t base = offset_[k];
      for (std::size_t t = locate(k, y); t > 0; t -= t & (~t + 1)) s += bits_[base + t - 1];
    }
    return s;
  }

 private:
  // Number of stored ys in node k that are < y.
  std::size_t locate(std::size_t k, std::size_t y) const {
    const auto first = ys_.begin() + static_cast<std::ptrdiff_t>(offset_[k]);
    const auto last = ys_.begin() + static_cast<std::ptrdiff_t>(offset_[k + 1]);
    return static_cast<std::size_t>(std::lower_bound(first, last, y) - first);
  }

  std::vector<std::size_t> offset_;  // node k occupies [offset_[k], offset_[k+1])
  std::vector<std::size_t> ys_;
  std::vector<long> bits_;
};

}  // namespace polycross::detail
