#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "upk/analysis.hpp"
#include "upk/errors.hpp"
#include "upk/generators.hpp"

namespace upk {
namespace {

constexpr double kE = std::numbers::e;

TEST(Harmonic, Values) {
  EXPECT_NEAR(generalized_harmonic(4), 2.0833333, 1e-7);
  EXPECT_NEAR(generalized_harmonic(2.5), 1.0666667, 1e-7);
  EXPECT_EQ(generalized_harmonic(1), 1.0);
  EXPECT_THROW(generalized_harmonic(0.5), std::domain_error);
}

TEST(Harmonic, BoundsExample) {
  EXPECT_NEAR(generalized_harmonic(10) - generalized_harmonic(2), 1.4289683, 1e-7);
  EXPECT_TRUE(harmonic_bounds_check(10, 2));
  EXPECT_TRUE(harmonic_bounds_check(7, 7));
  EXPECT_TRUE(harmonic_bounds_check(7.25, 1.25));
  EXPECT_THROW(harmonic_bounds_check(3, 5), std::domain_error);
  EXPECT_THROW(harmonic_bounds_check(3.5, 1), std::domain_error);
}

TEST(Harmonic, IntegerGrid) {
  for (int k = 1; k <= 500; ++k) {
    for (int p = 1; p <= k; ++p) ASSERT_TRUE(harmonic_bounds_check(k, p)) << k << ' ' << p;
  }
}

TEST(Harmonic, FractionalGrid) {
  for (double frac : {0.125, 0.5, 0.75}) {
    for (int k = 1; k <= 80; ++k) {
      for (int p = 1; p <= k; ++p) ASSERT_TRUE(harmonic_bounds_check(k + frac, p + frac));
    }
  }
}

TEST(Lemma2, Values) {
  EXPECT_TRUE(lemma2_check(1 / (kE * kE)));
  EXPECT_TRUE(lemma2_check(1.0));
  EXPECT_TRUE(lemma2_check(1e-12));
  EXPECT_THROW(lemma2_check(0.0), std::domain_error);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(lemma2_check(std::pow(10.0, -6.0 + 6.0 * i / 99)));
}

TEST(Bounds, AtCurve) {
  EXPECT_NEAR(c_at_bound(1), 0.6321206, 1e-7);
  EXPECT_EQ(c_at_bound(kE), 0.0);
  EXPECT_EQ(c_at_bound(5), 0.0);
  EXPECT_NEAR(c_at_bound(0.5), 0.3160603, 1e-7);
  EXPECT_NEAR(c_at_bound(std::nextafter(1.0, 2.0)), c_at_bound(1), 1e-12);
  EXPECT_THROW(c_at_bound(0), std::domain_error);
}

TEST(Bounds, AtupCurve) {
  EXPECT_EQ(c_atup_bound(1), 0.5);
  EXPECT_EQ(c_atup_bound(2), 0.25);
  EXPECT_EQ(c_atup_bound(0.5), 0.25);
  for (double r = 1; r < 50; r *= 1.37) EXPECT_DOUBLE_EQ(c_atup_bound(r), c_atup_bound(1 / r));
}

TEST(Bounds, Crossover) {
  const double rs = at_atup_crossover();
  EXPECT_NEAR(rs, 2.0578, 1e-4);
  for (double r = 1.0; r < kE; r += 0.001) {
    if (std::abs(r - rs) < 1e-9) continue;
    EXPECT_EQ(c_at_bound(r) >= c_atup_bound(r), r <= rs) << r;
  }
}

TEST(Bounds, PrefixCheck) {
  EXPECT_TRUE(prefix_bound_holds(std::vector<double>{0.1, 0.04}, 0.02));
  EXPECT_FALSE(prefix_bound_holds(std::vector<double>{0.21}, 0.02));
  EXPECT_FALSE(prefix_bound_holds(std::vector<double>{0.15, 0.15}, 0.02));
}

TEST(RandomMix, HitsTargetAverage) {
  std::mt19937_64 rng(12);
  for (double target : {1.0 / 800, 0.005, 0.0125, 0.04, 0.2, 0.45, 1.0}) {
    for (int order = 0; order < 3; ++order) {
      RandomMixConfig cfg;
      cfg.target = target;
      cfg.order = static_cast<ArrivalOrder>(order);
      auto seq = random_mix_sequence(cfg, rng);
      EXPECT_NEAR(opt_average(seq) / target, 1.0, 1e-6) << target;
    }
  }
}

TEST(RandomMix, OrderIsApplied) {
  std::mt19937_64 rng(1);
  RandomMixConfig cfg;
  cfg.target = 0.01;
  cfg.order = ArrivalOrder::Descending;
  auto seq = random_mix_sequence(cfg, rng);
  EXPECT_TRUE(std::is_sorted(seq.begin(), seq.end(), std::greater<>{}));
}

TEST(RandomMix, Deterministic) {
  RandomMixConfig cfg;
  cfg.target = 0.01;
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  auto x = random_mix_sequence(cfg, a);
  auto y = random_mix_sequence(cfg, b);
  EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
}

TEST(RandomMix, BadTarget) {
  std::mt19937_64 rng(1);
  RandomMixConfig cfg;
  cfg.target = 1.5;
  EXPECT_THROW(random_mix_sequence(cfg, rng), ConfigError);
  cfg.target = 0.01;
  cfg.max_attempts = 0;
  EXPECT_THROW(random_mix_sequence(cfg, rng), InfeasibleError);
}

}  // namespace
}  // namespace upk
