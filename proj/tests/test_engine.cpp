#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gen.hpp"
#include "upk/engine.hpp"
#include "upk/errors.hpp"

namespace upk {
namespace {

// Literal replay: after every accept, rescan every j for count == j.
std::int64_t naive_profit(const RequestSequence& seq, const ThresholdFunction& T) {
  std::vector<double> acc;
  double level = 0.0;
  std::int64_t i = 0;
  for (double x : seq) {
    if (x <= T(i + 1) && level + x <= 1.0) {
      acc.push_back(x);
      level += x;
      i = 0;
      for (std::int64_t j = 0; j <= static_cast<std::int64_t>(acc.size()); ++j) {
        const double t = T(j + 1);
        const auto c = std::count_if(acc.begin(), acc.end(), [t](double v) { return v > t; });
        if (c == j) i = j;
      }
    }
  }
  return static_cast<std::int64_t>(acc.size());
}

TEST(Threshold, AtValues) {
  auto T = at_threshold(0.1);
  EXPECT_NEAR(T(1), 0.2718282, 1e-7);
  EXPECT_NEAR(T(2), 0.2137303, 1e-7);
  EXPECT_NEAR(T(3), 0.1761, 1e-4);
  EXPECT_NEAR(T(8), 0.0936, 1e-4);
  EXPECT_EQ(at_threshold(0.003)(1), 0.003 * std::numbers::e);
}

TEST(Threshold, AtupValues) {
  auto T = atup_threshold(0.02);
  EXPECT_EQ(T(1), 0.1);
  EXPECT_NEAR(T(2), 0.0707107, 1e-7);
  EXPECT_EQ(atup_threshold(0.5)(1), 0.5);
}

TEST(Threshold, RejectsBadPredictions) {
  EXPECT_THROW(at_threshold(0.0), ConfigError);
  EXPECT_THROW(atup_threshold(-1.0), ConfigError);
  EXPECT_THROW(at_threshold(std::nan("")), ConfigError);
}

TEST(Threshold, FirstCountingIndexBracketsSize) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-9.0, 0.0);
  for (double ahat : {1e-4, 0.005, 0.1}) {
    for (const auto& T : {at_threshold(ahat), atup_threshold(ahat)}) {
      for (int n = 0; n < 500; ++n) {
        const double x = std::exp(d(rng));
        const std::int64_t j = T.first_counting_index(x);
        EXPECT_GT(x, T(j + 1));
        if (j > 0) {
          EXPECT_LE(x, T(j));
        }
      }
    }
  }
}

TEST(CurrentIndex, Examples) {
  PackingState empty;
  EXPECT_EQ(current_index(empty, at_threshold(0.1)), 0);

  PackingState one;
  one.accept(0.25);
  EXPECT_EQ(current_index(one, at_threshold(0.1)), 1);

  PackingState two;
  two.accept(0.05);
  two.accept(0.05);
  EXPECT_EQ(current_index(two, atup_threshold(0.02)), 0);
}

TEST(CurrentIndex, IndexCanJumpSeveralSteps) {
  auto T = at_threshold(0.1);
  PackingState s;
  for (int n = 0; n < 3; ++n) s.accept(0.17);  // in (T(4), T(3)]
  EXPECT_EQ(current_index(s, T), 3);
  EXPECT_EQ(current_index_at_least(s, T), 3);
}

TEST(Engine, AtExamples) {
  EXPECT_EQ(run_at({0.3}, 0.1).profit, 0);
  PackingResult r = run_at({0.25, 0.25}, 0.1);
  EXPECT_EQ(r.profit, 1);
  EXPECT_EQ(r.trace[1], Verdict::RejectSize);
  EXPECT_EQ(run_at(RequestSequence{}, 0.3).profit, 0);
}

TEST(Engine, AtTenTenths) {
  // i jumps from 0 to 7 on the seventh accept, and 0.1 > T(8).
  PackingResult r = run_at(RequestSequence(std::vector<double>(10, 0.1)), 0.1);
  EXPECT_EQ(r.profit, 7);
  EXPECT_EQ(r.trace[7], Verdict::RejectSize);
}

TEST(Engine, AtRejectsItemsAboveEVersusPrediction) {
  // 33 items of 3 â with â = 0.01: all exceed T(1) = â e.
  RequestSequence seq(std::vector<double>(33, 0.03));
  EXPECT_EQ(run_at(seq, 0.01).profit, 0);
  EXPECT_EQ(opt_pack(seq).profit, 33);
}

TEST(Engine, AtupExamples) {
  EXPECT_EQ(run_atup({0.1}, 0.02).profit, 1);
  EXPECT_EQ(run_atup({0.11}, 0.02).profit, 0);
  EXPECT_EQ(run_atup({0.1, 0.1}, 0.02).profit, 1);
}

TEST(Engine, StrictSizeTestChangesBoundaryVerdict) {
  EXPECT_EQ(run_adaptive_threshold({0.1}, atup_threshold(0.02), SizeTest::Strict).profit, 0);
}

TEST(Engine, RejectionReasons) {
  PackingResult r = run_atup({0.09, 0.05, 0.2, 0.06}, 0.02);
  EXPECT_EQ(r.trace[2], Verdict::RejectSize);
  EngineRun run(at_threshold(0.3));
  EXPECT_EQ(run.offer(0.6), Verdict::Accept);
  EXPECT_EQ(run.offer(0.45), Verdict::RejectSize);    // T(2) ~ 0.4492
  EXPECT_EQ(run.offer(0.41), Verdict::RejectCapacity);
}

TEST(Engine, MatchesNaiveReplay) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 150; ++n) {
    const double ahat = std::exp(std::uniform_real_distribution<double>(std::log(1e-3), std::log(0.2))(rng));
    auto seq = testing::log_sequence(rng, 120, ahat / 4, std::min(1.0, 4 * ahat));
    ASSERT_EQ(run_at(seq, ahat).profit, naive_profit(seq, at_threshold(ahat))) << n;
    ASSERT_EQ(run_atup(seq, ahat).profit, naive_profit(seq, atup_threshold(ahat))) << n;
  }
}

TEST(Engine, IncrementalIndexMatchesRescanAfterEveryItem) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    const double ahat = n % 2 ? 0.005 : 0.05;
    auto seq = testing::log_sequence(rng, 400, ahat / 8, std::min(1.0, 3 * ahat));
    for (const auto& T : {at_threshold(ahat), atup_threshold(ahat)}) {
      EngineRun run(T);
      for (double x : seq) {
        run.offer(x);
        ASSERT_EQ(run.index(), current_index(run.state(), T));
        ASSERT_EQ(run.index(), current_index_at_least(run.state(), T));
      }
    }
  }
}

TEST(Engine, AcceptedItemsRespectTheCapBeforeThem) {
  std::mt19937_64 rng(8);
  auto seq = testing::log_sequence(rng, 2000, 1e-4, 0.05);
  EngineRun run(atup_threshold(0.002));
  for (double x : seq) {
    const double cap = run.threshold()(run.index() + 1);
    const Verdict v = run.offer(x);
    if (accepted(v)) {
      EXPECT_LE(x, cap);
    }
    if (v == Verdict::RejectSize) {
      EXPECT_GT(x, cap);
    }
  }
  EXPECT_LE(run.state().level(), 1.0);
}

TEST(IndexTracker, RegrowsPastInitialCapacity) {
  IndexTracker t;
  for (int n = 0; n < 1000; ++n) t.add(0);
  EXPECT_EQ(t.index(), 1000);
}

}  // namespace
}  // namespace upk
