#include <gtest/gtest.h>

#include <sstream>

#include "upk/errors.hpp"
#include "upk/report_io.hpp"
#include "upk/sweep.hpp"

namespace upk {
namespace {

std::string render(const std::vector<RatioReport>& reports, OutputFormat f) {
  std::ostringstream out;
  write_reports(out, reports, f);
  return out.str();
}

TEST(Sweep, AtupRandomGridPasses) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::ATup;
  spec.r_grid = {0.25, 0.5, 1, 2, 4};
  spec.ahat = 1.0 / 200;
  spec.trials = 50;
  for (const RatioReport& r : run_sweep(spec)) {
    EXPECT_TRUE(r.pass) << r.r;
    EXPECT_TRUE(r.prefix_bound_ok) << r.r;
    EXPECT_EQ(r.trials, 50);
  }
}

TEST(Sweep, AtAccuratePredictionPasses) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::AT;
  spec.r_grid = {1};
  spec.ahat = 1.0 / 200;
  spec.trials = 20;
  auto reports = run_sweep(spec);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].pass);
  EXPECT_NEAR(reports[0].theoretical_bound, 0.6321, 1e-4);
  EXPECT_NEAR(reports[0].additive_slack, 2 * std::numbers::e + 1, 1e-15);
}

TEST(Sweep, GreedyOnHarmonicFamily) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::GreedyAll;
  spec.generator = SweepGenerator::SigmaJ;
  spec.r_grid = {100};
  spec.trials = 1;
  auto reports = run_sweep(spec);
  EXPECT_LT(reports[0].min_empirical_ratio, 0.2);
  EXPECT_TRUE(reports[0].pass);
}

TEST(Sweep, AdversaryGenerators) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::AT;
  spec.generator = SweepGenerator::Trusted;
  spec.ahat = 0.01;
  spec.r_grid = {1};
  spec.trials = 2;
  EXPECT_TRUE(run_sweep(spec)[0].pass);

  spec.generator = SweepGenerator::SemiTrusted;
  spec.b = 7;
  spec.r_grid = {0.5};
  EXPECT_TRUE(run_sweep(spec)[0].pass);

  spec.algorithm = SweepAlgorithm::ATup;
  spec.generator = SweepGenerator::Tradeoff;
  spec.ahat = 0.001;
  spec.b = 2;
  spec.r_grid = {0.5, 1};
  for (const auto& r : run_sweep(spec)) {
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.prefix_bound_ok);
  }
}

TEST(Sweep, ParallelMatchesSerialByteForByte) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::AT;
  spec.r_grid = {0.25, 0.75, 1.5, 2.5};
  spec.trials = 12;
  spec.seed = 42;
  const auto par = run_sweep(spec);
  const auto ser = run_sweep_serial(spec);
  for (auto f : {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Text}) {
    EXPECT_EQ(render(par, f), render(ser, f));
  }
}

TEST(Sweep, SeedChangesInputs) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::ATup;
  spec.r_grid = {2};
  spec.trials = 10;
  spec.seed = 1;
  const auto a = render(run_sweep(spec), OutputFormat::Csv);
  spec.seed = 2;
  const auto b = render(run_sweep(spec), OutputFormat::Csv);
  EXPECT_NE(a, b);
  spec.seed = 1;
  EXPECT_EQ(a, render(run_sweep(spec), OutputFormat::Csv));
}

TEST(Sweep, Validation) {
  SweepSpec spec;
  EXPECT_THROW(spec.validate(), ConfigError);
  spec.r_grid = {1};
  spec.trials = 0;
  EXPECT_THROW(spec.validate(), ConfigError);
  spec.trials = 1;
  spec.r_grid = {-1};
  EXPECT_THROW(spec.validate(), ConfigError);
  spec.r_grid = {300};
  EXPECT_THROW(spec.validate(), ConfigError);  // r * ahat > 1
  spec.generator = SweepGenerator::Trusted;
  spec.r_grid = {60};
  EXPECT_THROW(spec.validate(), ConfigError);  // a = 0.3
}

TEST(Sweep, ZeroOptIsVacuousPass) {
  SweepSpec spec;
  spec.algorithm = SweepAlgorithm::AT;
  spec.r_grid = {1};
  spec.trials = 1;
  TrialOutcome t;
  auto rep = summarize_point(spec, 0, {t});
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.min_empirical_ratio, 0.0);
}

TEST(ReportIo, CsvHeaderAndRow) {
  RatioReport r;
  r.r = 0.5;
  r.alg = "atup";
  r.trials = 3;
  r.mean_alg_profit = 10;
  r.mean_opt_profit = 20;
  r.min_empirical_ratio = 0.1;
  r.theoretical_bound = 0.25;
  r.additive_slack = 1;
  r.pass = true;
  EXPECT_EQ(render({r}, OutputFormat::Csv),
            std::string(kSweepCsvHeader) + "\n0.5,atup,3,10,20,0.1,0.25,1,true\n");
  EXPECT_NE(render({r}, OutputFormat::Json).find("\"min_empirical_ratio\": 0.1"),
            std::string::npos);
}

TEST(ReportIo, NumberFormats) {
  EXPECT_EQ(format_shortest(0.1), "0.1");
  EXPECT_EQ(format_significant(2 * std::numbers::e + 1), "6.436564");
  EXPECT_EQ(format_significant(1.2), "1.2");
}

}  // namespace
}  // namespace upk
