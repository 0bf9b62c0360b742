#pragma once

// Data model for the online unit-profit knapsack: item sizes, request
// sequences, packing state, and the offline reference solutions.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace upk {

// Knapsack capacity. Every fit test in the library is `level + size <= kCapacity`.
inline constexpr double kCapacity = 1.0;

// A size in (0, 1], as a fraction of the knapsack.
class ItemSize {
 public:
  // Throws ConfigError when value is outside (0, 1] or not finite.
  explicit ItemSize(double value);

  double value() const { return value_; }

  friend auto operator<=>(const ItemSize&, const ItemSize&) = default;

 private:
  double value_;
};

// Ordered, immutable list of item sizes.
class RequestSequence {
 public:
  RequestSequence() = default;
  // Throws ConfigError naming the first offending position.
  explicit RequestSequence(std::vector<double> sizes);
  RequestSequence(std::initializer_list<double> sizes);

  std::size_t size() const { return sizes_.size(); }
  bool empty() const { return sizes_.empty(); }
  double operator[](std::size_t i) const { return sizes_[i]; }
  std::span<const double> sizes() const { return sizes_; }
  auto begin() const { return sizes_.begin(); }
  auto end() const { return sizes_.end(); }

 private:
  std::vector<double> sizes_;
};

enum class Verdict : std::uint8_t {
  Accept,
  RejectSize,      // the algorithm's own size cap refused the item
  RejectCapacity,  // level + size would exceed capacity
};

inline bool accepted(Verdict v) { return v == Verdict::Accept; }

// A knapsack being filled by one run. Accepted sizes are kept sorted in
// descending order so rank queries are binary searches.
class PackingState {
 public:
  double level() const { return level_; }
  std::size_t accepted_count() const { return accepted_desc_.size(); }
  std::span<const double> accepted_descending() const { return accepted_desc_; }
  std::span<const Verdict> trace() const { return trace_; }

  bool fits(double size) const { return level_ + size <= kCapacity; }

  // Number of accepted items strictly larger than x.
  std::size_t count_larger(double x) const;

  // Records an acceptance. Throws ProtocolError if the item does not fit.
  void accept(double size);
  void reject(Verdict reason);

 private:
  double level_ = 0.0;
  std::vector<double> accepted_desc_;
  std::vector<Verdict> trace_;
};

struct PackingResult {
  std::int64_t profit = 0;
  double final_level = 0.0;
  std::vector<Verdict> trace;
  std::vector<double> accepted_sizes;  // ascending

  static PackingResult from_state(const PackingState& state);
};

// Offline optimum: smallest items first (stable on ties), maximal prefix
// that fits.
PackingResult opt_pack(const RequestSequence& seq);

// Average size of the items in opt_pack(seq). Throws std::domain_error when
// the optimum accepts nothing.
double opt_average(const RequestSequence& seq);

inline constexpr std::size_t kBruteForceLimit = 20;

// Maximum cardinality of a feasible subset, by exhaustive enumeration.
// Throws std::length_error for more than kBruteForceLimit items.
std::int64_t brute_force_opt(const RequestSequence& seq);

// Accepts every item that fits, in arrival order.
PackingResult greedy_accept_all(const RequestSequence& seq);

// Sum of `count` copies of `size` added one at a time onto `base`, in the same
// order opt_pack and the online runs accumulate.
double accumulate_copies(double base, double size, std::int64_t count);

// Largest double in [0, size] satisfying `fits`, which must be monotone
// (true at 0, and true below any point where it is true). Bisects over the
// IEEE bit patterns, which order non-negative doubles.
template <class Fits>
double shrink_until(double size, Fits fits) {
  if (fits(size)) return size;
  std::uint64_t lo = 0;
  std::uint64_t hi = std::bit_cast<std::uint64_t>(size);
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (fits(std::bit_cast<double>(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::bit_cast<double>(lo);
}

// Largest double not above `size` such that `count` sequential copies added
// onto `base` stay within capacity. Generators whose construction fills the
// knapsack exactly use this, since 1/n is rarely representable.
double shrink_to_fit(double base, double size, std::int64_t count);

}  // namespace upk
