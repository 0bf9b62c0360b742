#pragma once

// Bound curves and numeric lemma checks.

#include <numbers>
#include <span>

namespace upk {

// Sum of 1/i for i = 1 + k - floor(k), 2 + k - floor(k), ..., k. Throws
// std::domain_error for k < 1.
double generalized_harmonic(double k);

// ln k - ln(p+1) <= H_k - H_p <= ln k - ln p. Throws std::domain_error unless
// k >= p >= 1 and k - p is a nonnegative integer.
bool harmonic_bounds_check(double k, double p);

// e^(1 - ae) >= e - e^2 a, to 1e-12 relative. Throws std::domain_error for a <= 0.
bool lemma2_check(double a);

// Competitive ratio of AT at error ratio r = a/â.
double c_at_bound(double r);
// Competitive ratio of ATup at error ratio r.
double c_atup_bound(double r);

// Ratio above which ATup's guarantee beats AT's: (e + sqrt(e^2 - 2e)) / 2.
double at_atup_crossover();

inline constexpr double kAtAdditiveSlack = 2.0 * std::numbers::e + 1.0;
inline constexpr double kAtupAdditiveSlack = 1.0;

// profit >= bound * opt - slack
inline bool within_bound(double profit, double opt, double bound, double slack) {
  return profit >= bound * opt - slack;
}

// For every k, the k largest of `descending` sum to at most sqrt(2 k â) + tol.
bool prefix_bound_holds(std::span<const double> descending, double ahat,
                        double tol = 1e-9);

}  // namespace upk
