#pragma once

// Sweeps over error ratios r = a/â: generate inputs, run one algorithm with
// prediction â, and compare its profit with the theoretical guarantee.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace upk {

enum class SweepAlgorithm { AT, ATup, GreedyAll };
enum class SweepGenerator { Random, Trusted, SemiTrusted, Tradeoff, SigmaJ };

const char* to_string(SweepAlgorithm a);
const char* to_string(SweepGenerator g);
std::optional<SweepAlgorithm> parse_sweep_algorithm(std::string_view s);
std::optional<SweepGenerator> parse_sweep_generator(std::string_view s);

// How each generator reads a grid value r:
//   Random       opt_average = r * â
//   Trusted      adversary average a = r * â
//   SemiTrusted  r2 = r
//   Tradeoff     q = r
//   SigmaJ       j = round(r)
struct SweepSpec {
  SweepAlgorithm algorithm = SweepAlgorithm::ATup;
  SweepGenerator generator = SweepGenerator::Random;
  std::vector<double> r_grid;
  double ahat = 0.005;
  std::int64_t trials = 50;
  std::uint64_t seed = 0;
  std::int64_t b = 0;     // SemiTrusted, Tradeoff
  double z = 2.0;         // Tradeoff
  bool perturb = false;   // Tradeoff

  // Throws ConfigError naming the first violated constraint, including the
  // adversary config invariants at every grid point.
  void validate() const;
};

struct TrialOutcome {
  std::int64_t alg_profit = 0;
  std::int64_t opt_profit = 0;
  double r = 0.0;       // realised opt average / â
  double bound = 0.0;   // guarantee at the realised r
  bool pass = true;
  bool prefix_ok = true;  // ATup only: k largest accepted sum to <= sqrt(2kâ)
};

struct RatioReport {
  double r = 0.0;
  std::string alg;
  std::int64_t trials = 0;
  double mean_alg_profit = 0.0;
  double mean_opt_profit = 0.0;
  double min_empirical_ratio = 0.0;
  double theoretical_bound = 0.0;  // at the worst trial
  double additive_slack = 0.0;
  std::int64_t alg_profit = 0;     // worst trial
  std::int64_t opt_profit = 0;     // worst trial
  std::int64_t violations = 0;
  bool prefix_bound_ok = true;
  bool pass = true;
};

double additive_slack(SweepAlgorithm a);

// One trial. Deterministic in (spec.seed + point, trial).
TrialOutcome run_trial(const SweepSpec& spec, std::size_t point, std::int64_t trial);

// Aggregates trial outcomes into the report for one grid point.
RatioReport summarize_point(const SweepSpec& spec, std::size_t point,
                            const std::vector<TrialOutcome>& trials);

// OpenMP over (point, trial) pairs; output identical to run_sweep_serial.
std::vector<RatioReport> run_sweep(const SweepSpec& spec);
std::vector<RatioReport> run_sweep_serial(const SweepSpec& spec);

}  // namespace upk
