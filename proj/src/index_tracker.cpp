#include <algorithm>

#include "upk/engine.hpp"

namespace upk {

void IndexTracker::add(std::int64_t first_index) {
  buckets_.push_back(first_index);
  // Entries j > m cannot satisfy c(j) >= j, so the tree only needs [0, m].
  if (buckets_.size() + 1 > capacity_) {
    rebuild(std::max<std::size_t>(16, 2 * (buckets_.size() + 1)));
  } else if (first_index < static_cast<std::int64_t>(capacity_)) {
    suffix_increment(1, 0, capacity_, static_cast<std::size_t>(first_index));
  }
  index_ = rightmost_nonnegative();
}

void IndexTracker::rebuild(std::size_t capacity) {
  capacity_ = capacity;
  std::vector<std::int64_t> d(capacity_, 0);
  for (std::int64_t b : buckets_) {
    if (b < static_cast<std::int64_t>(capacity_)) ++d[static_cast<std::size_t>(b)];
  }
  std::int64_t running = 0;
  for (std::size_t j = 0; j < capacity_; ++j) {
    running += d[j];
    d[j] = running - static_cast<std::int64_t>(j);
  }
  max_.assign(4 * capacity_, 0);
  lazy_.assign(4 * capacity_, 0);
  build(1, 0, capacity_, d);
}

void IndexTracker::build(std::size_t node, std::size_t lo, std::size_t hi,
                         const std::vector<std::int64_t>& d) {
  if (hi - lo == 1) {
    max_[node] = d[lo];
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  build(2 * node, lo, mid, d);
  build(2 * node + 1, mid, hi, d);
  max_[node] = std::max(max_[2 * node], max_[2 * node + 1]);
}

void IndexTracker::suffix_increment(std::size_t node, std::size_t lo,
                                    std::size_t hi, std::size_t from) {
  if (hi <= from) return;
  if (lo >= from) {
    ++max_[node];
    ++lazy_[node];
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  suffix_increment(2 * node, lo, mid, from);
  suffix_increment(2 * node + 1, mid, hi, from);
  max_[node] = lazy_[node] + std::max(max_[2 * node], max_[2 * node + 1]);
}

std::int64_t IndexTracker::rightmost_nonnegative() const {
  if (capacity_ == 0) return 0;
  std::size_t node = 1, lo = 0, hi = capacity_;
  std::int64_t pending = 0;  // lazies of strict ancestors
  // c(0) >= 0 always, so the root max is non-negative.
  while (hi - lo > 1) {
    pending += lazy_[node];
    std::size_t mid = lo + (hi - lo) / 2;
    if (max_[2 * node + 1] + pending >= 0) {
      node = 2 * node + 1;
      lo = mid;
    } else {
      node = 2 * node;
      hi = mid;
    }
  }
  return static_cast<std::int64_t>(lo);
}

}  // namespace upk
