#include "upk/selfcheck.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "upk/analysis.hpp"
#include "upk/core.hpp"
#include "upk/engine.hpp"
#include "upk/generators.hpp"

namespace upk {

bool SelfcheckReport::all_pass() const {
  for (const auto& item : items) {
    if (!item.pass) return false;
  }
  return !items.empty();
}

namespace {

SelfcheckItem lemma1_grid(int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    for (int p = 1; p <= k; ++p) {
      if (!harmonic_bounds_check(k, p)) {
        return {"harmonic bounds", false, "k=" + std::to_string(k) + " p=" + std::to_string(p)};
      }
    }
  }
  return {"harmonic bounds", true, "k,p <= " + std::to_string(kmax)};
}

SelfcheckItem lemma2_grid(int points) {
  for (int i = 0; i < points; ++i) {
    const double a = std::pow(10.0, -6.0 + 6.0 * i / (points - 1));
    if (!lemma2_check(a)) return {"exponential bound", false, "a=" + std::to_string(a)};
  }
  return {"exponential bound", true, std::to_string(points) + " points in [1e-6, 1]"};
}

SelfcheckItem threshold_monotone() {
  for (double ahat : {1e-4, 1.0 / 200, 0.02, 0.1, 0.5}) {
    for (const auto& T : {at_threshold(ahat), atup_threshold(ahat)}) {
      double prev = T(1);
      for (std::int64_t i = 2; i <= 5000; ++i) {
        const double cur = T(i);
        if (!(cur < prev && cur > 0.0)) {
          return {"threshold monotone", false,
                  std::string(to_string(T.kind())) + " at i=" + std::to_string(i)};
        }
        prev = cur;
      }
    }
  }
  return {"threshold monotone", true, "AT and ATup, i <= 5000"};
}

SelfcheckItem frozen_examples(SizeTest test) {
  struct Case {
    const char* what;
    RequestSequence seq;
    ThresholdFunction T;
    std::int64_t profit;
  };
  const Case cases[] = {
      {"ATup boundary item", RequestSequence{0.1}, atup_threshold(0.02), 1},
      {"AT small items", RequestSequence{0.05, 0.05, 0.05}, at_threshold(0.1), 3},
      {"ATup oversize item", RequestSequence{0.2}, atup_threshold(0.02), 0},
  };
  for (const Case& c : cases) {
    const std::int64_t got = run_adaptive_threshold(c.seq, c.T, test).profit;
    if (got != c.profit) {
      return {"engine examples", false,
              std::string(c.what) + ": profit " + std::to_string(got) + ", expected " +
                  std::to_string(c.profit)};
    }
  }
  return {"engine examples", true, "frozen profits reproduced"};
}

// Random sequences shared by the trace-based checks.
std::vector<RequestSequence> sample_sequences(int count, std::mt19937_64& rng) {
  std::vector<RequestSequence> out;
  std::uniform_real_distribution<double> log_target(std::log(1.0 / 400), std::log(1.0 / 20));
  for (int i = 0; i < count; ++i) {
    RandomMixConfig cfg;
    cfg.target = std::exp(log_target(rng));
    cfg.order = static_cast<ArrivalOrder>(i % 3);
    out.push_back(random_mix_sequence(cfg, rng));
  }
  return out;
}

SelfcheckItem prefix_traces(const std::vector<RequestSequence>& seqs, SizeTest test) {
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (double ahat : {1.0 / 200, 0.02}) {
      PackingResult res = run_adaptive_threshold(seqs[i], atup_threshold(ahat), test);
      std::vector<double> desc(res.accepted_sizes.rbegin(), res.accepted_sizes.rend());
      if (!prefix_bound_holds(desc, ahat)) {
        return {"prefix bound", false, "sequence " + std::to_string(i)};
      }
    }
  }
  return {"prefix bound", true, std::to_string(seqs.size()) + " sequences"};
}

SelfcheckItem index_vs_rescan(const std::vector<RequestSequence>& seqs, SizeTest test) {
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (const auto& T : {at_threshold(1.0 / 200), atup_threshold(1.0 / 200)}) {
      EngineRun run(T, test);
      for (double x : seqs[i]) {
        run.offer(x);
        if (run.index() != current_index(run.state(), T)) {
          return {"incremental index", false, "sequence " + std::to_string(i)};
        }
      }
    }
  }
  return {"incremental index", true, std::to_string(seqs.size()) + " sequences"};
}

SelfcheckItem opt_vs_brute_force(int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 16);
  std::uniform_real_distribution<double> size(0.01, 0.6);
  for (int i = 0; i < count; ++i) {
    std::vector<double> xs(static_cast<std::size_t>(len(rng)));
    for (double& x : xs) x = size(rng);
    RequestSequence seq(std::move(xs));
    if (opt_pack(seq).profit != brute_force_opt(seq)) {
      return {"opt vs brute force", false, "sequence " + std::to_string(i)};
    }
  }
  return {"opt vs brute force", true, std::to_string(count) + " sequences"};
}

}  // namespace

SelfcheckReport run_selfcheck(bool quick, bool inject_fault) {
  const SizeTest test = inject_fault ? SizeTest::Strict : SizeTest::Inclusive;
  std::mt19937_64 rng(0);
  SelfcheckReport report;
  report.items.push_back(lemma1_grid(quick ? 60 : 500));
  report.items.push_back(lemma2_grid(100));
  report.items.push_back(threshold_monotone());
  report.items.push_back(frozen_examples(test));
  const auto seqs = sample_sequences(quick ? 10 : 60, rng);
  report.items.push_back(prefix_traces(seqs, test));
  report.items.push_back(index_vs_rescan(seqs, test));
  report.items.push_back(opt_vs_brute_force(quick ? 50 : 500, rng));
  return report;
}

void write_selfcheck(std::ostream& out, const SelfcheckReport& report) {
  for (const auto& item : report.items) {
    out << (item.pass ? "PASS " : "FAIL ") << item.name << ": " << item.detail << '\n';
  }
}

}  // namespace upk
