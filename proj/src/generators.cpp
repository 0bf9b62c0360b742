#include "upk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "upk/errors.hpp"

namespace upk {
namespace {

// Average of the smallest-first packing of f * sorted; +inf when nothing fits.
double scaled_opt_average(const std::vector<double>& sorted, double f) {
  double level = 0.0;
  std::int64_t count = 0;
  for (double x : sorted) {
    double y = f * x;
    if (level + y > kCapacity) break;
    level += y;
    ++count;
  }
  return count == 0 ? HUGE_VAL : level / static_cast<double>(count);
}

}  // namespace

RequestSequence random_mix_sequence(const RandomMixConfig& cfg, std::mt19937_64& rng) {
  const double a = cfg.target;
  if (!(a > 0.0 && a <= 1.0)) throw ConfigError("random generator requires 0 < target <= 1");

  const auto m = std::max<std::int64_t>(1, std::llround(1.0 / a));
  const auto n_small = std::clamp<std::int64_t>(
      std::llround(cfg.small_fraction * static_cast<double>(m)), 1, m);
  const double large_hi = std::min(3.0 * a, 1.0);
  std::int64_t n_large = (m - n_small) +
                         static_cast<std::int64_t>(std::ceil(cfg.large_surplus * static_cast<double>(m)));
  if (!(large_hi > a)) n_large = 0;

  std::uniform_real_distribution<double> small_dist(0.5 * a, a);
  std::uniform_real_distribution<double> large_dist(a, large_hi);

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(n_small + n_large));
    for (std::int64_t i = 0; i < n_small; ++i) raw.push_back(small_dist(rng));
    for (std::int64_t i = 0; i < n_large; ++i) {
      // Reflect [a, hi) onto (a, hi].
      raw.push_back(a + large_hi - large_dist(rng));
    }

    std::vector<double> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    if (!(sorted.front() > 0.0)) continue;

    // Largest factor keeping every item within capacity.
    double hi = 1.0 / sorted.back();
    while (hi * sorted.back() > kCapacity) hi = std::nextafter(hi, 0.0);
    if (scaled_opt_average(sorted, hi) < a) continue;
    double lo = 0.0;

    // The scaled average only jumps downward, so the sign change this
    // bisection brackets is a genuine crossing.
    double f = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = lo + (hi - lo) / 2.0;
      if (mid <= lo || mid >= hi) break;
      const double avg = scaled_opt_average(sorted, mid);
      if (avg == a) {
        lo = hi = mid;
        break;
      }
      if (avg < a) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    f = std::abs(scaled_opt_average(sorted, lo) - a) <= std::abs(scaled_opt_average(sorted, hi) - a)
            ? lo
            : hi;
    if (!(f > 0.0)) continue;

    std::vector<double> sizes;
    sizes.reserve(raw.size());
    for (double x : raw) sizes.push_back(f * x);
    switch (cfg.order) {
      case ArrivalOrder::Shuffled:
        std::shuffle(sizes.begin(), sizes.end(), rng);
        break;
      case ArrivalOrder::Descending:
        std::sort(sizes.begin(), sizes.end(), std::greater<>{});
        break;
      case ArrivalOrder::Ascending:
        std::sort(sizes.begin(), sizes.end());
        break;
    }
    RequestSequence seq(std::move(sizes));
    if (std::abs(opt_average(seq) / a - 1.0) <= cfg.tolerance) return seq;
  }
  throw InfeasibleError("random generator could not reach opt_average " + std::to_string(a) +
                        " within " + std::to_string(cfg.max_attempts) + " attempts");
}

}  // namespace upk
