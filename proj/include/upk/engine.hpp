#pragma once

// Adaptive Threshold: accept an item when it fits and is no larger than
// T(i + 1), where i is the largest j >= 0 such that exactly j accepted items
// are strictly larger than T(j + 1). AT and ATup differ only in T.

#include <cstdint>
#include <vector>

#include "upk/core.hpp"

namespace upk {

enum class ThresholdKind { AT, ATup };

const char* to_string(ThresholdKind kind);

// Strictly decreasing positive size cap i -> T(i), i >= 1. Evaluated on
// demand; nothing is tabulated.
class ThresholdFunction {
 public:
  // AT:   T(i) = â e / (â e (i - 1) + 1)
  static ThresholdFunction at(double ahat);
  // ATup: T(i) = sqrt(â / (2 i))
  static ThresholdFunction atup(double ahat);

  ThresholdKind kind() const { return kind_; }
  double prediction() const { return ahat_; }

  double operator()(std::int64_t i) const;

  // Smallest j >= 0 with size > T(j + 1): the first index whose count an
  // accepted item of this size contributes to. Capped at kMaxIndex.
  std::int64_t first_counting_index(double size) const;

  static constexpr std::int64_t kMaxIndex = std::int64_t{1} << 62;

 private:
  ThresholdFunction(ThresholdKind kind, double ahat);

  ThresholdKind kind_;
  double ahat_;
  double ahat_e_;  // â e, precomputed for AT
};

// Both throw ConfigError unless â is finite and positive.
ThresholdFunction at_threshold(double ahat);
ThresholdFunction atup_threshold(double ahat);

// Number of accepted items strictly larger than x.
std::size_t count_larger(const PackingState& state, double x);

// Reference rescans of the line-4 maximum; O(m log m). current_index uses the
// "count == j" form, current_index_at_least the "count >= j" form.
std::int64_t current_index(const PackingState& state, const ThresholdFunction& T);
std::int64_t current_index_at_least(const PackingState& state,
                                    const ThresholdFunction& T);

// Maintains i = max{ j >= 0 : c(j) >= j } where c(j) counts accepted items
// with first_counting_index <= j. A lazy segment tree over j holds
// c(j) - j; insertion is a suffix +1, the index is the rightmost
// non-negative entry. O(log m) per insertion, amortised over regrowth.
class IndexTracker {
 public:
  void add(std::int64_t first_index);
  std::int64_t index() const { return index_; }
  std::size_t size() const { return buckets_.size(); }

 private:
  void rebuild(std::size_t capacity);
  void build(std::size_t node, std::size_t lo, std::size_t hi,
             const std::vector<std::int64_t>& d);
  void suffix_increment(std::size_t node, std::size_t lo, std::size_t hi,
                        std::size_t from);
  std::int64_t rightmost_nonnegative() const;

  std::vector<std::int64_t> buckets_;
  std::vector<std::int64_t> max_;
  std::vector<std::int64_t> lazy_;
  std::size_t capacity_ = 0;
  std::int64_t index_ = 0;
};

// Test hook: Strict flips the size test from `<=` to `<`.
enum class SizeTest { Inclusive, Strict };

// One online Adaptive Threshold run, fed one item at a time.
class EngineRun {
 public:
  explicit EngineRun(ThresholdFunction threshold,
                     SizeTest size_test = SizeTest::Inclusive);

  Verdict offer(double size);

  // Current value of i (before the next item).
  std::int64_t index() const { return tracker_.index(); }
  const PackingState& state() const { return state_; }
  const ThresholdFunction& threshold() const { return threshold_; }
  PackingResult result() const { return PackingResult::from_state(state_); }

 private:
  ThresholdFunction threshold_;
  SizeTest size_test_;
  PackingState state_;
  IndexTracker tracker_;
};

PackingResult run_adaptive_threshold(const RequestSequence& seq,
                                     const ThresholdFunction& T,
                                     SizeTest size_test = SizeTest::Inclusive);
PackingResult run_at(const RequestSequence& seq, double ahat);
PackingResult run_atup(const RequestSequence& seq, double ahat);

}  // namespace upk
