#pragma once

// Adaptive adversaries that build a request sequence while watching an online
// decider's accept/reject answers, plus the static hard families.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "upk/core.hpp"
#include "upk/engine.hpp"

namespace upk {

// Black-box online algorithm. The adversary keeps the level and count itself.
class OnlineDecider {
 public:
  virtual ~OnlineDecider() = default;
  virtual bool offer(double size) = 0;
  virtual std::string name() const = 0;
};

// AT or ATup behind the decider interface.
class ThresholdDecider final : public OnlineDecider {
 public:
  explicit ThresholdDecider(ThresholdFunction threshold) : run_(threshold) {}
  bool offer(double size) override { return accepted(run_.offer(size)); }
  std::string name() const override { return to_string(run_.threshold().kind()); }
  const EngineRun& run() const { return run_; }

 private:
  EngineRun run_;
};

class GreedyDecider final : public OnlineDecider {
 public:
  bool offer(double size) override;
  std::string name() const override { return "greedy"; }

 private:
  double level_ = 0.0;
};

class RejectAllDecider final : public OnlineDecider {
 public:
  bool offer(double) override { return false; }
  std::string name() const override { return "reject"; }
};

// Accepts the first m items that fit, then nothing.
class AcceptFirstDecider final : public OnlineDecider {
 public:
  explicit AcceptFirstDecider(std::int64_t m) : remaining_(m) {}
  bool offer(double size) override;
  std::string name() const override { return "accept-first"; }

 private:
  std::int64_t remaining_;
  double level_ = 0.0;
};

enum class DeciderKind { AT, ATup, Greedy, RejectAll, AcceptFirst };

// `ahat` is used by AT/ATup, `m` by AcceptFirst.
std::unique_ptr<OnlineDecider> make_decider(DeciderKind kind, double ahat,
                                            std::int64_t m = 0);

// Smallest prediction a config accepts.
inline constexpr double kMinAverage = 1.0 / (1 << 20);

// Returns n when 1/x is a positive integer n (to 1e-9 relative).
std::optional<std::int64_t> integral_reciprocal(double x);

struct TrustedAdversaryConfig {
  double a = 0.0;
  std::int64_t inv_a = 0;  // 1/a
  double eps = 0.0;        // a^2 / 10
  std::int64_t k0 = 0;     // floor(1/(a e))

  // Throws ConfigError unless 2^-20 <= a < 1/(2e) and 1/a is an integer.
  static TrustedAdversaryConfig make(double a);
};

struct SemiTrustedAdversaryConfig {
  double ahat = 0.0;
  double r2 = 0.0;
  std::int64_t b = 0;
  std::int64_t final_count = 0;  // 1/(r2 â)
  std::int64_t k0 = 0;           // floor(1/(â e))

  // Throws ConfigError unless 2^-20 <= â < 1/(2e+b), 0 < r2 < 1, b >= 0 and
  // 1/(r2 â) is an integer.
  static SemiTrustedAdversaryConfig make(double ahat, double r2, std::int64_t b);
};

struct TradeoffAdversaryConfig {
  double ahat = 0.0;
  double z = 0.0;
  double q = 0.0;
  std::int64_t b = 0;
  std::int64_t p = 0;            // floor(z/(4â))
  std::int64_t final_count = 0;  // 1/(q â)
  bool perturb = false;          // round sizes get + eps
  double eps = 0.0;              // â^2 / 10

  // Throws ConfigError unless 2^-20 <= â, 0 < z <= 2, 0 < q < 1/sqrt(z â),
  // b >= 0 and 1/(q â) is an integer.
  static TradeoffAdversaryConfig make(double ahat, double z, double q,
                                      std::int64_t b, bool perturb = false);
};

enum class TerminalCase { Case1, Case2, EarlyTerminate, SmallItems };

const char* to_string(TerminalCase c);

// Run of identical consecutive items.
struct ItemBlock {
  double size = 0.0;
  std::int64_t count = 0;
};

struct BlockOpt {
  std::int64_t profit = 0;
  double level = 0.0;
};

// opt_pack over a run-length encoded sequence; bit-identical level.
BlockOpt opt_pack_blocks(const std::vector<ItemBlock>& blocks);

struct AdversaryOutcome {
  std::vector<ItemBlock> blocks;  // emitted sequence, run-length encoded
  std::int64_t n = 0;
  TerminalCase terminal_case = TerminalCase::Case1;
  std::int64_t alg_profit = 0;
  double alg_level = 0.0;
  std::int64_t opt_profit = 0;
  double opt_level = 0.0;
  double true_a = 0.0;

  double ratio() const;
  RequestSequence sequence() const;
};

AdversaryOutcome run_trusted_adversary(const TrustedAdversaryConfig& cfg,
                                       OnlineDecider& alg);
AdversaryOutcome run_semitrusted_adversary(const SemiTrustedAdversaryConfig& cfg,
                                           OnlineDecider& alg);
AdversaryOutcome run_tradeoff_adversary(const TradeoffAdversaryConfig& cfg,
                                        OnlineDecider& alg);

// [1, 1/2, ..., 1/j]. Throws ConfigError for j < 1.
RequestSequence sigma_harmonic(std::int64_t j);

// k items of 1/k, 2(k - l) items of 1/(2k), 2l items of 1. Throws ConfigError
// unless k >= 1 and 0 <= l <= k.
RequestSequence advice_lb_family(std::int64_t k, std::int64_t l);

// Profit of an online algorithm on advice_lb_family(k, l) that accepts
// `first_block_accepts` of the leading 1/k items and then greedily
// everything that fits. Used by the exhaustive optimality cross-check.
std::int64_t lb_family_profit(std::int64_t k, std::int64_t l,
                              std::int64_t first_block_accepts);

}  // namespace upk
