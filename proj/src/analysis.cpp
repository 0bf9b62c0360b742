#include "upk/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace upk {

namespace {
constexpr double kE = std::numbers::e;
}

double generalized_harmonic(double k) {
  if (!(k >= 1.0) || !std::isfinite(k)) {
    throw std::domain_error("generalized_harmonic requires k >= 1");
  }
  const double offset = k - std::floor(k);
  const auto terms = static_cast<long long>(std::floor(k));
  double sum = 0.0;
  for (long long i = 1; i <= terms; ++i) sum += 1.0 / (offset + static_cast<double>(i));
  return sum;
}

bool harmonic_bounds_check(double k, double p) {
  if (!(p >= 1.0 && k >= p) || !std::isfinite(k)) {
    throw std::domain_error("harmonic_bounds_check requires k >= p >= 1");
  }
  const double gap = k - p;
  if (gap != std::floor(gap)) {
    throw std::domain_error("harmonic_bounds_check requires k - p to be an integer");
  }
  // H_k - H_p is the sum over the grid points above p, taken directly.
  double diff = 0.0;
  const auto terms = static_cast<long long>(gap);
  for (long long i = 1; i <= terms; ++i) diff += 1.0 / (p + static_cast<double>(i));
  const double lower = std::log(k) - std::log(p + 1.0);
  const double upper = std::log(k) - std::log(p);
  const double tol = 1e-12 * std::max(1.0, std::abs(upper));
  return lower <= diff + tol && diff <= upper + tol;
}

bool lemma2_check(double a) {
  if (!(a > 0.0)) throw std::domain_error("lemma2_check requires a > 0");
  const double lhs = std::exp(1.0 - a * kE);
  const double rhs = kE - kE * kE * a;
  return lhs >= rhs - 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
}

double c_at_bound(double r) {
  if (!(r > 0.0)) throw std::domain_error("c_at_bound requires r > 0");
  if (r <= 1.0) return r * (kE - 1.0) / kE;
  if (r <= kE) return (kE - r) / kE;
  return 0.0;
}

double c_atup_bound(double r) {
  if (!(r > 0.0)) throw std::domain_error("c_atup_bound requires r > 0");
  return r <= 1.0 ? r / 2.0 : 1.0 / (2.0 * r);
}

double at_atup_crossover() { return (kE + std::sqrt(kE * kE - 2.0 * kE)) / 2.0; }

bool prefix_bound_holds(std::span<const double> descending, double ahat, double tol) {
  double sum = 0.0;
  for (std::size_t k = 1; k <= descending.size(); ++k) {
    sum += descending[k - 1];
    if (sum > std::sqrt(2.0 * static_cast<double>(k) * ahat) + tol) return false;
  }
  return true;
}

}  // namespace upk
