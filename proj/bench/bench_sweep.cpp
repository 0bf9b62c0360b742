// OpenMP sweep vs the serial reference loop, and the incremental index vs a
// full rescan after every accept.

#include <benchmark/benchmark.h>

#include <random>

#include "upk/engine.hpp"
#include "upk/generators.hpp"
#include "upk/sweep.hpp"

namespace {

upk::SweepSpec bench_spec() {
  upk::SweepSpec spec;
  spec.algorithm = upk::SweepAlgorithm::ATup;
  spec.r_grid = {0.25, 0.5, 1, 2, 4, 8};
  spec.ahat = 1.0 / 400;
  spec.trials = 40;
  spec.seed = 1;
  return spec;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(upk::run_sweep(spec));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(upk::run_sweep_serial(spec));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

upk::RequestSequence bench_sequence(double target) {
  std::mt19937_64 rng(3);
  upk::RandomMixConfig cfg;
  cfg.target = target;
  return upk::random_mix_sequence(cfg, rng);
}

void BM_EngineIncremental(benchmark::State& state) {
  const double ahat = 1.0 / static_cast<double>(state.range(0));
  const auto seq = bench_sequence(ahat);
  for (auto _ : state) benchmark::DoNotOptimize(upk::run_atup(seq, ahat));
}
BENCHMARK(BM_EngineIncremental)->Arg(200)->Arg(2000)->Arg(8000);

// Same decisions, but i is recomputed from scratch after each accept.
void BM_EngineRescan(benchmark::State& state) {
  const double ahat = 1.0 / static_cast<double>(state.range(0));
  const auto seq = bench_sequence(ahat);
  const auto T = upk::atup_threshold(ahat);
  for (auto _ : state) {
    upk::PackingState s;
    std::int64_t i = 0;
    for (double x : seq) {
      if (x <= T(i + 1) && s.fits(x)) {
        s.accept(x);
        i = upk::current_index(s, T);
      }
    }
    benchmark::DoNotOptimize(s.accepted_count());
  }
}
BENCHMARK(BM_EngineRescan)->Arg(200)->Arg(2000)->Arg(8000);

}  // namespace

BENCHMARK_MAIN();
