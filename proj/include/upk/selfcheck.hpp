#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upk {

struct SelfcheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfcheckReport {
  std::vector<SelfcheckItem> items;
  bool all_pass() const;
};

// Lemma grids, prefix-bound traces, threshold monotonicity, incremental vs
// rescanned index, frozen engine examples and OPT against brute force.
// `quick` shrinks every grid. `inject_fault` runs the engine with the strict
// size test, which the frozen examples must catch.
SelfcheckReport run_selfcheck(bool quick, bool inject_fault = false);

void write_selfcheck(std::ostream& out, const SelfcheckReport& report);

}  // namespace upk
