#include "upk/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "upk/errors.hpp"

namespace upk {

ItemSize::ItemSize(double value) : value_(value) {
  if (!(std::isfinite(value) && value > 0.0 && value <= 1.0)) {
    throw ConfigError("item size must lie in (0, 1], got " +
                      std::to_string(value));
  }
}

RequestSequence::RequestSequence(std::vector<double> sizes)
    : sizes_(std::move(sizes)) {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    try {
      ItemSize{sizes_[i]};
    } catch (const ConfigError& e) {
      throw ConfigError("item " + std::to_string(i) + ": " + e.what());
    }
  }
}

RequestSequence::RequestSequence(std::initializer_list<double> sizes)
    : RequestSequence(std::vector<double>(sizes)) {}

std::size_t PackingState::count_larger(double x) const {
  auto it = std::partition_point(accepted_desc_.begin(), accepted_desc_.end(),
                                 [x](double v) { return v > x; });
  return static_cast<std::size_t>(it - accepted_desc_.begin());
}

void PackingState::accept(double size) {
  if (!fits(size)) {
    throw ProtocolError("accepted an item of size " + std::to_string(size) +
                        " at level " + std::to_string(level_));
  }
  level_ += size;
  auto pos = std::upper_bound(accepted_desc_.begin(), accepted_desc_.end(),
                              size, std::greater<>{});
  accepted_desc_.insert(pos, size);
  trace_.push_back(Verdict::Accept);
}

void PackingState::reject(Verdict reason) {
  if (reason == Verdict::Accept) {
    throw std::invalid_argument("reject() needs a rejection reason");
  }
  trace_.push_back(reason);
}

PackingResult PackingResult::from_state(const PackingState& state) {
  PackingResult r;
  r.profit = static_cast<std::int64_t>(state.accepted_count());
  r.final_level = state.level();
  r.trace.assign(state.trace().begin(), state.trace().end());
  r.accepted_sizes.assign(state.accepted_descending().rbegin(),
                          state.accepted_descending().rend());
  return r;
}

PackingResult opt_pack(const RequestSequence& seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });

  PackingResult r;
  r.trace.assign(seq.size(), Verdict::RejectCapacity);
  double level = 0.0;
  for (std::size_t idx : order) {
    double x = seq[idx];
    if (level + x > kCapacity) break;
    level += x;
    r.trace[idx] = Verdict::Accept;
    r.accepted_sizes.push_back(x);
  }
  r.profit = static_cast<std::int64_t>(r.accepted_sizes.size());
  r.final_level = level;
  return r;
}

double opt_average(const RequestSequence& seq) {
  PackingResult r = opt_pack(seq);
  if (r.profit == 0) {
    throw std::domain_error("optimal packing is empty; average undefined");
  }
  return r.final_level / static_cast<double>(r.profit);
}

std::int64_t brute_force_opt(const RequestSequence& seq) {
  const std::size_t n = seq.size();
  if (n > kBruteForceLimit) {
    throw std::length_error("brute_force_opt supports at most " +
                            std::to_string(kBruteForceLimit) + " items, got " +
                            std::to_string(n));
  }
  // Subset sums are accumulated in ascending size order so the subset opt_pack
  // picks is summed exactly as opt_pack sums it.
  std::vector<double> x(seq.begin(), seq.end());
  std::sort(x.begin(), x.end());

  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<double> sum(subsets, 0.0);
  int best = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    int top = std::bit_width(mask) - 1;
    sum[mask] = sum[mask ^ (std::uint32_t{1} << top)] + x[top];
    if (sum[mask] <= kCapacity) best = std::max(best, std::popcount(mask));
  }
  return best;
}

PackingResult greedy_accept_all(const RequestSequence& seq) {
  PackingState state;
  for (double x : seq) {
    if (state.fits(x)) {
      state.accept(x);
    } else {
      state.reject(Verdict::RejectCapacity);
    }
  }
  return PackingResult::from_state(state);
}

double accumulate_copies(double base, double size, std::int64_t count) {
  double level = base;
  for (std::int64_t i = 0; i < count; ++i) level += size;
  return level;
}

double shrink_to_fit(double base, double size, std::int64_t count) {
  // Sequential summation drifts by at most count ulps of the running total,
  // so a clear margin skips the exact check.
  const double n = static_cast<double>(count);
  if (base + n * size + (n + 2.0) * 0x1p-52 * (base + n * size + 1.0) <= kCapacity) {
    return size;
  }
  return shrink_until(size, [&](double s) {
    return accumulate_copies(base, s, count) <= kCapacity;
  });
}

}  // namespace upk
