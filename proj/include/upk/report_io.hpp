#pragma once

// Text, CSV and JSON renderings of sweep reports and adversary outcomes.

#include <iosfwd>
#include <string>
#include <vector>

#include "upk/adversaries.hpp"
#include "upk/sweep.hpp"

namespace upk {

enum class OutputFormat { Csv, Json, Text };

// Shortest decimal that round-trips.
std::string format_shortest(double v);
// Fixed number of significant digits, as used by the text format.
std::string format_significant(double v, int digits = 7);

inline constexpr const char* kSweepCsvHeader =
    "r,alg,trials,mean_alg_profit,mean_opt_profit,min_empirical_ratio,"
    "theoretical_bound,additive_slack,pass";

void write_reports(std::ostream& out, const std::vector<RatioReport>& reports,
                   OutputFormat format);

void write_outcome(std::ostream& out, const AdversaryOutcome& outcome,
                   const std::string& alg, OutputFormat format);

}  // namespace upk
