#include "upk/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace upk {

std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

namespace {

nlohmann::ordered_json report_json(const RatioReport& r) {
  nlohmann::ordered_json j;
  j["r"] = r.r;
  j["alg"] = r.alg;
  j["trials"] = r.trials;
  j["mean_alg_profit"] = r.mean_alg_profit;
  j["mean_opt_profit"] = r.mean_opt_profit;
  j["min_empirical_ratio"] = r.min_empirical_ratio;
  j["theoretical_bound"] = r.theoretical_bound;
  j["additive_slack"] = r.additive_slack;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

void write_reports(std::ostream& out, const std::vector<RatioReport>& reports,
                   OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      out << kSweepCsvHeader << '\n';
      for (const RatioReport& r : reports) {
        out << format_shortest(r.r) << ',' << r.alg << ',' << r.trials << ','
            << format_shortest(r.mean_alg_profit) << ',' << format_shortest(r.mean_opt_profit)
            << ',' << format_shortest(r.min_empirical_ratio) << ','
            << format_shortest(r.theoretical_bound) << ',' << format_shortest(r.additive_slack)
            << ',' << (r.pass ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const RatioReport& r : reports) arr.push_back(report_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const RatioReport& r : reports) {
        out << "r=" << format_significant(r.r) << " alg=" << r.alg << " trials=" << r.trials
            << " mean_alg=" << format_significant(r.mean_alg_profit)
            << " mean_opt=" << format_significant(r.mean_opt_profit)
            << " min_ratio=" << format_significant(r.min_empirical_ratio)
            << " bound=" << format_significant(r.theoretical_bound)
            << " slack=" << format_significant(r.additive_slack)
            << (r.pass ? " PASS" : " FAIL") << '\n';
      }
      break;
  }
}

void write_outcome(std::ostream& out, const AdversaryOutcome& o, const std::string& alg,
                   OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      out << "case,alg,n,alg_profit,opt_profit,true_a,ratio\n"
          << to_string(o.terminal_case) << ',' << alg << ',' << o.n << ',' << o.alg_profit << ','
          << o.opt_profit << ',' << format_shortest(o.true_a) << ','
          << format_shortest(o.ratio()) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["case"] = to_string(o.terminal_case);
      j["alg"] = alg;
      j["n"] = o.n;
      j["alg_profit"] = o.alg_profit;
      j["opt_profit"] = o.opt_profit;
      j["true_a"] = o.true_a;
      j["ratio"] = o.ratio();
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      out << "case=" << to_string(o.terminal_case) << " alg=" << alg << " n=" << o.n
          << " alg_profit=" << o.alg_profit << " opt_profit=" << o.opt_profit
          << " true_a=" << format_significant(o.true_a)
          << " ratio=" << format_significant(o.ratio()) << '\n';
      break;
  }
}

}  // namespace upk
