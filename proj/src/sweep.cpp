#include "upk/sweep.hpp"

#include <cmath>
#include <exception>
#include <random>

#include "upk/adversaries.hpp"
#include "upk/analysis.hpp"
#include "upk/engine.hpp"
#include "upk/errors.hpp"
#include "upk/generators.hpp"

namespace upk {

const char* to_string(SweepAlgorithm a) {
  switch (a) {
    case SweepAlgorithm::AT: return "at";
    case SweepAlgorithm::ATup: return "atup";
    case SweepAlgorithm::GreedyAll: return "greedy";
  }
  return "?";
}

const char* to_string(SweepGenerator g) {
  switch (g) {
    case SweepGenerator::Random: return "random";
    case SweepGenerator::Trusted: return "trusted";
    case SweepGenerator::SemiTrusted: return "semitrusted";
    case SweepGenerator::Tradeoff: return "tradeoff";
    case SweepGenerator::SigmaJ: return "sigma";
  }
  return "?";
}

std::optional<SweepAlgorithm> parse_sweep_algorithm(std::string_view s) {
  for (auto a : {SweepAlgorithm::AT, SweepAlgorithm::ATup, SweepAlgorithm::GreedyAll}) {
    if (s == to_string(a)) return a;
  }
  return std::nullopt;
}

std::optional<SweepGenerator> parse_sweep_generator(std::string_view s) {
  for (auto g : {SweepGenerator::Random, SweepGenerator::Trusted, SweepGenerator::SemiTrusted,
                 SweepGenerator::Tradeoff, SweepGenerator::SigmaJ}) {
    if (s == to_string(g)) return g;
  }
  return std::nullopt;
}

double additive_slack(SweepAlgorithm a) {
  switch (a) {
    case SweepAlgorithm::AT: return kAtAdditiveSlack;
    case SweepAlgorithm::ATup: return kAtupAdditiveSlack;
    case SweepAlgorithm::GreedyAll: return 0.0;
  }
  return 0.0;
}

void SweepSpec::validate() const {
  if (r_grid.empty()) throw ConfigError("sweep requires a nonempty r grid");
  if (trials < 1) throw ConfigError("sweep requires trials >= 1");
  if (!(std::isfinite(ahat) && ahat > 0.0 && ahat <= 1.0)) {
    throw ConfigError("sweep requires 0 < ahat <= 1");
  }
  for (double r : r_grid) {
    if (!(std::isfinite(r) && r > 0.0)) throw ConfigError("sweep requires every r > 0");
    switch (generator) {
      case SweepGenerator::Random:
        if (r * ahat > 1.0) throw ConfigError("random generator requires r * ahat <= 1");
        break;
      case SweepGenerator::Trusted:
        TrustedAdversaryConfig::make(r * ahat);
        break;
      case SweepGenerator::SemiTrusted:
        SemiTrustedAdversaryConfig::make(ahat, r, b);
        break;
      case SweepGenerator::Tradeoff:
        TradeoffAdversaryConfig::make(ahat, z, r, b, perturb);
        break;
      case SweepGenerator::SigmaJ:
        if (std::llround(r) < 1) throw ConfigError("sigma generator requires round(r) >= 1");
        break;
    }
  }
}

namespace {

DeciderKind decider_kind(SweepAlgorithm a) {
  switch (a) {
    case SweepAlgorithm::AT: return DeciderKind::AT;
    case SweepAlgorithm::ATup: return DeciderKind::ATup;
    case SweepAlgorithm::GreedyAll: return DeciderKind::Greedy;
  }
  return DeciderKind::Greedy;
}

double bound_at(SweepAlgorithm a, double r) {
  switch (a) {
    case SweepAlgorithm::AT: return c_at_bound(r);
    case SweepAlgorithm::ATup: return c_atup_bound(r);
    case SweepAlgorithm::GreedyAll: return 0.0;
  }
  return 0.0;
}

void score(const SweepSpec& spec, TrialOutcome& out, double opt_level) {
  if (out.opt_profit == 0) {
    out.r = 0.0;
    out.bound = 0.0;
    out.pass = true;
    return;
  }
  out.r = opt_level / static_cast<double>(out.opt_profit) / spec.ahat;
  out.bound = bound_at(spec.algorithm, out.r);
  out.pass = within_bound(static_cast<double>(out.alg_profit),
                          static_cast<double>(out.opt_profit), out.bound,
                          additive_slack(spec.algorithm));
}

TrialOutcome run_on_sequence(const SweepSpec& spec, const RequestSequence& seq) {
  PackingResult res;
  switch (spec.algorithm) {
    case SweepAlgorithm::AT: res = run_at(seq, spec.ahat); break;
    case SweepAlgorithm::ATup: res = run_atup(seq, spec.ahat); break;
    case SweepAlgorithm::GreedyAll: res = greedy_accept_all(seq); break;
  }
  PackingResult opt = opt_pack(seq);
  TrialOutcome out;
  out.alg_profit = res.profit;
  out.opt_profit = opt.profit;
  if (spec.algorithm == SweepAlgorithm::ATup) {
    std::vector<double> desc(res.accepted_sizes.rbegin(), res.accepted_sizes.rend());
    out.prefix_ok = prefix_bound_holds(desc, spec.ahat);
  }
  score(spec, out, opt.final_level);
  return out;
}

TrialOutcome run_duel(const SweepSpec& spec, double r) {
  auto decider = make_decider(decider_kind(spec.algorithm), spec.ahat);
  AdversaryOutcome duel;
  switch (spec.generator) {
    case SweepGenerator::Trusted:
      duel = run_trusted_adversary(TrustedAdversaryConfig::make(r * spec.ahat), *decider);
      break;
    case SweepGenerator::SemiTrusted:
      duel = run_semitrusted_adversary(SemiTrustedAdversaryConfig::make(spec.ahat, r, spec.b),
                                       *decider);
      break;
    case SweepGenerator::Tradeoff:
      duel = run_tradeoff_adversary(
          TradeoffAdversaryConfig::make(spec.ahat, spec.z, r, spec.b, spec.perturb), *decider);
      break;
    default:
      throw std::logic_error("not an adversary generator");
  }
  TrialOutcome out;
  out.alg_profit = duel.alg_profit;
  out.opt_profit = duel.opt_profit;
  if (auto* t = dynamic_cast<ThresholdDecider*>(decider.get());
      t != nullptr && spec.algorithm == SweepAlgorithm::ATup) {
    out.prefix_ok = prefix_bound_holds(t->run().state().accepted_descending(), spec.ahat);
  }
  score(spec, out, duel.opt_level);
  return out;
}

}  // namespace

TrialOutcome run_trial(const SweepSpec& spec, std::size_t point, std::int64_t trial) {
  const double r = spec.r_grid.at(point);
  switch (spec.generator) {
    case SweepGenerator::Random: {
      const std::uint64_t s = spec.seed + point;
      std::seed_seq seeds{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                          static_cast<std::uint32_t>(trial)};
      std::mt19937_64 rng(seeds);
      RandomMixConfig cfg;
      cfg.target = r * spec.ahat;
      cfg.order = static_cast<ArrivalOrder>(trial % 3);
      return run_on_sequence(spec, random_mix_sequence(cfg, rng));
    }
    case SweepGenerator::SigmaJ:
      return run_on_sequence(spec, sigma_harmonic(std::llround(r)));
    default:
      return run_duel(spec, r);
  }
}

RatioReport summarize_point(const SweepSpec& spec, std::size_t point,
                            const std::vector<TrialOutcome>& trials) {
  RatioReport rep;
  rep.r = spec.r_grid.at(point);
  rep.alg = to_string(spec.algorithm);
  rep.trials = static_cast<std::int64_t>(trials.size());
  rep.additive_slack = additive_slack(spec.algorithm);
  double alg_sum = 0.0;
  double opt_sum = 0.0;
  bool first = true;
  for (const TrialOutcome& t : trials) {
    alg_sum += static_cast<double>(t.alg_profit);
    opt_sum += static_cast<double>(t.opt_profit);
    const double ratio = t.opt_profit > 0 ? static_cast<double>(t.alg_profit) /
                                                static_cast<double>(t.opt_profit)
                                          : 0.0;
    if (first || ratio < rep.min_empirical_ratio) {
      rep.min_empirical_ratio = ratio;
      rep.theoretical_bound = t.bound;
      rep.alg_profit = t.alg_profit;
      rep.opt_profit = t.opt_profit;
      first = false;
    }
    if (!t.pass) ++rep.violations;
    rep.prefix_bound_ok = rep.prefix_bound_ok && t.prefix_ok;
  }
  if (!trials.empty()) {
    rep.mean_alg_profit = alg_sum / static_cast<double>(trials.size());
    rep.mean_opt_profit = opt_sum / static_cast<double>(trials.size());
  }
  rep.pass = rep.violations == 0;
  return rep;
}

namespace {

std::vector<RatioReport> collect(const SweepSpec& spec, std::vector<TrialOutcome>& flat) {
  std::vector<RatioReport> reports;
  const auto per = static_cast<std::size_t>(spec.trials);
  for (std::size_t p = 0; p < spec.r_grid.size(); ++p) {
    std::vector<TrialOutcome> trials(flat.begin() + static_cast<std::ptrdiff_t>(p * per),
                                     flat.begin() + static_cast<std::ptrdiff_t>((p + 1) * per));
    reports.push_back(summarize_point(spec, p, trials));
  }
  return reports;
}

}  // namespace

std::vector<RatioReport> run_sweep_serial(const SweepSpec& spec) {
  spec.validate();
  const auto per = static_cast<std::size_t>(spec.trials);
  std::vector<TrialOutcome> flat(spec.r_grid.size() * per);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    flat[i] = run_trial(spec, i / per, static_cast<std::int64_t>(i % per));
  }
  return collect(spec, flat);
}

std::vector<RatioReport> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto per = static_cast<std::size_t>(spec.trials);
  const auto tasks = static_cast<std::int64_t>(spec.r_grid.size() * per);
  std::vector<TrialOutcome> flat(static_cast<std::size_t>(tasks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(tasks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < tasks; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      flat[u] = run_trial(spec, u / per, static_cast<std::int64_t>(u % per));
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return collect(spec, flat);
}

}  // namespace upk
