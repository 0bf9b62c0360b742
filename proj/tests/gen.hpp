#pragma once

// Small hand-rolled generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "upk/core.hpp"

namespace upk::testing {

// n uniform sizes in [lo, hi].
inline RequestSequence uniform_sequence(std::mt19937_64& rng, std::size_t n, double lo,
                                        double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> xs(n);
  for (double& x : xs) x = d(rng);
  return RequestSequence(std::move(xs));
}

// Mixed-scale sizes: log-uniform in [lo, hi], with occasional repeats so ties
// and equal-to-threshold cases show up.
inline RequestSequence log_sequence(std::mt19937_64& rng, std::size_t n, double lo,
                                    double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  std::bernoulli_distribution repeat(0.2);
  std::vector<double> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!xs.empty() && repeat(rng)) {
      xs.push_back(xs.back());
    } else {
      xs.push_back(std::exp(d(rng)));
    }
  }
  return RequestSequence(std::move(xs));
}

}  // namespace upk::testing
