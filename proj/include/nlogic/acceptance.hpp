#pragma once

#include <string>
#include <vector>

#include "nlogic/report.hpp"

namespace nlogic {

// The golden correspondent table: named sequent rows computed by the engine
// at a pinned class/side/mode, plus the two rule rows (residuation and the
// t-introduction rule) emitted as frame-axiom formulas.
struct GoldenRow {
  std::string name;
  std::string input;  // sequent text, or "axiom:<id>" for emitted rows
  std::string cls;
  std::string side;  // "", "translate", "cotranslate"
  std::string mode;  // "", "table6", "rspoon"
  std::string expected;
};

const std::vector<GoldenRow>& golden_rows();

// Run one acceptance criterion (1..11); records appended to the report.
void run_criterion(int k, const std::string& fixtures_dir, RunReport& report);

// Convenience: run all criteria; returns the combined report.
RunReport run_acceptance(const std::string& fixtures_dir, int only = 0);

// Prints name -> computed text for every golden row (maintenance helper).
std::string golden_actuals();

}  // namespace nlogic
