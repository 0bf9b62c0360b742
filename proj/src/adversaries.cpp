#include "upk/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "upk/errors.hpp"

namespace upk {
namespace {

constexpr double kE = std::numbers::e;

// Mediates one adversary/decider interaction and records the emitted items.
class Duel {
 public:
  explicit Duel(OnlineDecider& alg) : alg_(alg) {}

  bool give(double size) {
    if (!(size > 0.0 && size <= kCapacity)) {
      throw std::logic_error("adversary produced an item of size " +
                             std::to_string(size));
    }
    if (!blocks_.empty() && blocks_.back().size == size) {
      ++blocks_.back().count;
    } else {
      blocks_.push_back({size, 1});
    }
    ++n_;
    bool took = alg_.offer(size);
    if (took) {
      if (level_ + size > kCapacity) {
        throw ProtocolError(alg_.name() + " accepted an item of size " +
                            std::to_string(size) + " at level " +
                            std::to_string(level_));
      }
      level_ += size;
      ++accepted_;
    }
    return took;
  }

  void give_copies(double size, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) give(size);
  }

  double level() const { return level_; }
  std::int64_t accepted() const { return accepted_; }

  AdversaryOutcome finish(TerminalCase terminal) && {
    AdversaryOutcome out;
    out.blocks = std::move(blocks_);
    out.n = n_;
    out.terminal_case = terminal;
    out.alg_profit = accepted_;
    out.alg_level = level_;
    BlockOpt opt = opt_pack_blocks(out.blocks);
    out.opt_profit = opt.profit;
    out.opt_level = opt.level;
    out.true_a = opt.profit > 0 ? opt.level / static_cast<double>(opt.profit) : 0.0;
    return out;
  }

 private:
  OnlineDecider& alg_;
  std::vector<ItemBlock> blocks_;
  std::int64_t n_ = 0;
  double level_ = 0.0;
  std::int64_t accepted_ = 0;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

// floor(sqrt(x)) for x >= 0, corrected against rounding in sqrt.
std::int64_t floor_sqrt(double x) {
  auto c = static_cast<std::int64_t>(std::floor(std::sqrt(x)));
  while (static_cast<double>(c + 1) * static_cast<double>(c + 1) <= x) ++c;
  while (c > 0 && static_cast<double>(c) * static_cast<double>(c) > x) --c;
  return c;
}

}  // namespace

std::optional<std::int64_t> integral_reciprocal(double x) {
  if (!(std::isfinite(x) && x > 0.0)) return std::nullopt;
  double y = 1.0 / x;
  if (!(y < 9.0e15)) return std::nullopt;
  double n = std::round(y);
  if (n < 1.0 || std::abs(y - n) > 1e-9 * n) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

TrustedAdversaryConfig TrustedAdversaryConfig::make(double a) {
  require(std::isfinite(a) && a >= kMinAverage, "trusted adversary requires a >= 2^-20");
  require(a < 1.0 / (2.0 * kE), "trusted adversary requires a < 1/(2e)");
  auto inv = integral_reciprocal(a);
  require(inv.has_value(), "trusted adversary requires 1/a to be a positive integer");
  TrustedAdversaryConfig cfg;
  cfg.a = a;
  cfg.inv_a = *inv;
  cfg.eps = a * a / 10.0;
  cfg.k0 = static_cast<std::int64_t>(std::floor(1.0 / (a * kE)));
  return cfg;
}

SemiTrustedAdversaryConfig SemiTrustedAdversaryConfig::make(double ahat, double r2,
                                                            std::int64_t b) {
  require(b >= 0, "semi-trusted adversary requires b >= 0");
  require(std::isfinite(ahat) && ahat >= kMinAverage,
          "semi-trusted adversary requires ahat >= 2^-20");
  require(ahat < 1.0 / (2.0 * kE + static_cast<double>(b)),
          "semi-trusted adversary requires ahat < 1/(2e+b)");
  require(r2 > 0.0 && r2 < 1.0, "semi-trusted adversary requires 0 < r2 < 1");
  auto count = integral_reciprocal(r2 * ahat);
  require(count.has_value(),
          "semi-trusted adversary requires 1/(r2*ahat) to be a positive integer");
  SemiTrustedAdversaryConfig cfg;
  cfg.ahat = ahat;
  cfg.r2 = r2;
  cfg.b = b;
  cfg.final_count = *count;
  cfg.k0 = static_cast<std::int64_t>(std::floor(1.0 / (ahat * kE)));
  return cfg;
}

TradeoffAdversaryConfig TradeoffAdversaryConfig::make(double ahat, double z,
                                                      double q, std::int64_t b,
                                                      bool perturb) {
  require(b >= 0, "tradeoff adversary requires b >= 0");
  require(std::isfinite(ahat) && ahat >= kMinAverage,
          "tradeoff adversary requires ahat >= 2^-20");
  require(z > 0.0 && z <= 2.0, "tradeoff adversary requires 0 < z <= 2");
  require(q > 0.0 && q < 1.0 / std::sqrt(z * ahat),
          "tradeoff adversary requires 0 < q < 1/sqrt(z*ahat)");
  auto count = integral_reciprocal(q * ahat);
  require(count.has_value(),
          "tradeoff adversary requires 1/(q*ahat) to be a positive integer");
  TradeoffAdversaryConfig cfg;
  cfg.ahat = ahat;
  cfg.z = z;
  cfg.q = q;
  cfg.b = b;
  cfg.p = static_cast<std::int64_t>(std::floor(z / (4.0 * ahat)));
  cfg.final_count = *count;
  cfg.perturb = perturb;
  cfg.eps = ahat * ahat / 10.0;
  return cfg;
}

const char* to_string(TerminalCase c) {
  switch (c) {
    case TerminalCase::Case1: return "case1";
    case TerminalCase::Case2: return "case2";
    case TerminalCase::EarlyTerminate: return "early-terminate";
    case TerminalCase::SmallItems: return "small-items";
  }
  return "?";
}

BlockOpt opt_pack_blocks(const std::vector<ItemBlock>& blocks) {
  std::vector<ItemBlock> sorted = blocks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ItemBlock& x, const ItemBlock& y) { return x.size < y.size; });
  BlockOpt opt;
  for (const ItemBlock& blk : sorted) {
    for (std::int64_t i = 0; i < blk.count; ++i) {
      if (opt.level + blk.size > kCapacity) return opt;
      opt.level += blk.size;
      ++opt.profit;
    }
  }
  return opt;
}

double AdversaryOutcome::ratio() const {
  return opt_profit > 0
             ? static_cast<double>(alg_profit) / static_cast<double>(opt_profit)
             : 0.0;
}

RequestSequence AdversaryOutcome::sequence() const {
  std::vector<double> sizes;
  sizes.reserve(static_cast<std::size_t>(n));
  for (const ItemBlock& blk : blocks) sizes.insert(sizes.end(), blk.count, blk.size);
  return RequestSequence(std::move(sizes));
}

AdversaryOutcome run_trusted_adversary(const TrustedAdversaryConfig& cfg,
                                       OnlineDecider& alg) {
  Duel duel(alg);
  const double a = cfg.a;
  const double eps = cfg.eps;
  std::int64_t k = cfg.k0;
  while (duel.level() <= 1.0 - 1.0 / static_cast<double>(k) -
                             static_cast<double>(k) * eps) {
    const double round_size = 1.0 / static_cast<double>(k) - eps;
    bool took = false;
    for (std::int64_t t = 0; t < k && !took; ++t) took = duel.give(round_size);
    if (took) {
      ++k;
      continue;
    }
    // Whole round rejected: top the round up to exactly 1/a items filling the
    // knapsack. OPT sums the tail first, then the k round items.
    const std::int64_t tail_count = cfg.inv_a - k;
    const double ka = static_cast<double>(k) * a;
    double tail = ka * eps / (1.0 - ka);
    if (tail_count <= 0 || !(tail > 0.0)) {
      throw std::logic_error("trusted adversary reached a non-positive tail");
    }
    tail = shrink_until(tail, [&](double s) {
      return accumulate_copies(accumulate_copies(0.0, s, tail_count), round_size, k) <=
             kCapacity;
    });
    duel.give_copies(tail, tail_count);
    return std::move(duel).finish(TerminalCase::Case1);
  }
  duel.give_copies(shrink_to_fit(0.0, a, cfg.inv_a), cfg.inv_a);
  return std::move(duel).finish(TerminalCase::Case2);
}

AdversaryOutcome run_semitrusted_adversary(const SemiTrustedAdversaryConfig& cfg,
                                           OnlineDecider& alg) {
  Duel duel(alg);
  const double ahat = cfg.ahat;
  const double reserve = static_cast<double>(cfg.b + 1) * ahat * kE;
  std::int64_t k = cfg.k0 - 1;
  while (duel.level() <= 1.0 - 1.0 / static_cast<double>(k + 1) - reserve &&
         1.0 / static_cast<double>(k + 1) >= ahat) {
    ++k;
    const double round_size = shrink_to_fit(0.0, 1.0 / static_cast<double>(k), k);
    bool took = false;
    for (std::int64_t t = 0; t < k && !took; ++t) took = duel.give(round_size);
    if (took) continue;
    if (duel.accepted() < k - cfg.k0 - cfg.b) {
      return std::move(duel).finish(TerminalCase::EarlyTerminate);
    }
  }
  duel.give_copies(shrink_to_fit(0.0, cfg.r2 * ahat, cfg.final_count),
                   cfg.final_count);
  return std::move(duel).finish(TerminalCase::SmallItems);
}

AdversaryOutcome run_tradeoff_adversary(const TradeoffAdversaryConfig& cfg,
                                        OnlineDecider& alg) {
  Duel duel(alg);
  const double ahat = cfg.ahat;
  for (std::int64_t k = 1; k <= cfg.p; ++k) {
    const double zk = cfg.z * static_cast<double>(k);
    const std::int64_t count = floor_sqrt(zk / ahat);
    double size = std::sqrt(ahat / zk);
    if (cfg.perturb) {
      size = std::min(size + cfg.eps, kCapacity);
    } else {
      size = shrink_to_fit(0.0, size, count);
    }
    duel.give_copies(size, count);
    if (duel.accepted() < k - cfg.b) {
      return std::move(duel).finish(TerminalCase::EarlyTerminate);
    }
  }
  duel.give_copies(shrink_to_fit(0.0, cfg.q * ahat, cfg.final_count),
                   cfg.final_count);
  return std::move(duel).finish(TerminalCase::SmallItems);
}

RequestSequence sigma_harmonic(std::int64_t j) {
  if (j < 1) throw ConfigError("sigma_harmonic requires j >= 1");
  std::vector<double> sizes;
  sizes.reserve(static_cast<std::size_t>(j));
  for (std::int64_t i = 1; i <= j; ++i) sizes.push_back(1.0 / static_cast<double>(i));
  return RequestSequence(std::move(sizes));
}

RequestSequence advice_lb_family(std::int64_t k, std::int64_t l) {
  if (k < 1) throw ConfigError("advice_lb_family requires k >= 1");
  if (l < 0 || l > k) throw ConfigError("advice_lb_family requires 0 <= l <= k");
  const double kd = static_cast<double>(k);
  std::vector<double> sizes;
  sizes.reserve(static_cast<std::size_t>(3 * k));
  sizes.insert(sizes.end(), static_cast<std::size_t>(k), 1.0 / kd);
  sizes.insert(sizes.end(), static_cast<std::size_t>(2 * (k - l)), 1.0 / (2.0 * kd));
  sizes.insert(sizes.end(), static_cast<std::size_t>(2 * l), 1.0);
  return RequestSequence(std::move(sizes));
}

std::int64_t lb_family_profit(std::int64_t k, std::int64_t l,
                              std::int64_t first_block_accepts) {
  if (first_block_accepts < 0 || first_block_accepts > k) {
    throw ConfigError("first_block_accepts must lie in [0, k]");
  }
  RequestSequence seq = advice_lb_family(k, l);
  // Fixed prefix decision, then the best possible continuation: smallest of
  // the remaining items first.
  std::vector<double> rest(seq.begin() + k, seq.end());
  std::sort(rest.begin(), rest.end());
  double level = accumulate_copies(0.0, seq[0], first_block_accepts);
  std::int64_t profit = first_block_accepts;
  for (double x : rest) {
    if (level + x > kCapacity) break;
    level += x;
    ++profit;
  }
  return profit;
}

}  // namespace upk
