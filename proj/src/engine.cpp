#include "upk/engine.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "upk/errors.hpp"

namespace upk {

const char* to_string(ThresholdKind kind) {
  return kind == ThresholdKind::AT ? "at" : "atup";
}

ThresholdFunction::ThresholdFunction(ThresholdKind kind, double ahat)
    : kind_(kind), ahat_(ahat), ahat_e_(ahat * std::numbers::e) {
  if (!(std::isfinite(ahat) && ahat > 0.0)) {
    throw ConfigError("prediction ahat must be > 0, got " + std::to_string(ahat));
  }
}

ThresholdFunction ThresholdFunction::at(double ahat) {
  return ThresholdFunction(ThresholdKind::AT, ahat);
}

ThresholdFunction ThresholdFunction::atup(double ahat) {
  return ThresholdFunction(ThresholdKind::ATup, ahat);
}

double ThresholdFunction::operator()(std::int64_t i) const {
  const double di = static_cast<double>(i);
  if (kind_ == ThresholdKind::AT) {
    return ahat_e_ / (ahat_e_ * (di - 1.0) + 1.0);
  }
  return std::sqrt(ahat_ / (2.0 * di));
}

std::int64_t ThresholdFunction::first_counting_index(double size) const {
  // "size > T(j + 1)" is monotone in j because both formulas are monotone
  // under IEEE rounding, so exponential then binary search is exact.
  if (size > (*this)(1)) return 0;
  std::int64_t lo = 0;  // size <= T(lo + 1)
  std::int64_t hi = 1;
  while (!(size > (*this)(hi + 1))) {
    if (hi >= kMaxIndex / 2) return kMaxIndex;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (size > (*this)(mid + 1)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ThresholdFunction at_threshold(double ahat) { return ThresholdFunction::at(ahat); }
ThresholdFunction atup_threshold(double ahat) {
  return ThresholdFunction::atup(ahat);
}

std::size_t count_larger(const PackingState& state, double x) {
  return state.count_larger(x);
}

std::int64_t current_index(const PackingState& state, const ThresholdFunction& T) {
  const auto m = static_cast<std::int64_t>(state.accepted_count());
  for (std::int64_t j = m; j > 0; --j) {
    if (static_cast<std::int64_t>(state.count_larger(T(j + 1))) == j) return j;
  }
  return 0;
}

std::int64_t current_index_at_least(const PackingState& state,
                                    const ThresholdFunction& T) {
  const auto m = static_cast<std::int64_t>(state.accepted_count());
  for (std::int64_t j = m; j > 0; --j) {
    if (static_cast<std::int64_t>(state.count_larger(T(j + 1))) >= j) return j;
  }
  return 0;
}

EngineRun::EngineRun(ThresholdFunction threshold, SizeTest size_test)
    : threshold_(threshold), size_test_(size_test) {}

Verdict EngineRun::offer(double size) {
  const double cap = threshold_(tracker_.index() + 1);
  const bool size_ok =
      size_test_ == SizeTest::Inclusive ? size <= cap : size < cap;
  if (!size_ok) {
    state_.reject(Verdict::RejectSize);
    return Verdict::RejectSize;
  }
  if (!state_.fits(size)) {
    state_.reject(Verdict::RejectCapacity);
    return Verdict::RejectCapacity;
  }
  state_.accept(size);
  tracker_.add(threshold_.first_counting_index(size));
  return Verdict::Accept;
}

PackingResult run_adaptive_threshold(const RequestSequence& seq,
                                     const ThresholdFunction& T,
                                     SizeTest size_test) {
  EngineRun run(T, size_test);
  for (double x : seq) run.offer(x);
  return run.result();
}

PackingResult run_at(const RequestSequence& seq, double ahat) {
  return run_adaptive_threshold(seq, at_threshold(ahat));
}

PackingResult run_atup(const RequestSequence& seq, double ahat) {
  return run_adaptive_threshold(seq, atup_threshold(ahat));
}

}  // namespace upk
