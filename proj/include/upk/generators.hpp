#pragma once

// Random request sequences whose optimal packing has a prescribed average
// item size.

#include <cstdint>
#include <random>

#include "upk/core.hpp"

namespace upk {

enum class ArrivalOrder { Shuffled, Descending, Ascending };

struct RandomMixConfig {
  double target = 0.0;          // desired opt_average
  double small_fraction = 0.6;  // share of the optimum drawn from the small population
  double large_surplus = 0.5;   // extra large items, relative to the optimum size
  ArrivalOrder order = ArrivalOrder::Shuffled;
  int max_attempts = 100;
  double tolerance = 1e-6;      // relative error allowed on the target
};

// Small items are uniform in [target/2, target], large ones uniform in
// (target, min(3 target, 1)]. The whole draw is then scaled by a common factor,
// found by bisection, so that opt_average lands on the target. Throws
// ConfigError for a target outside (0, 1] and InfeasibleError when no draw
// within max_attempts hits the target.
RequestSequence random_mix_sequence(const RandomMixConfig& cfg, std::mt19937_64& rng);

}  // namespace upk
