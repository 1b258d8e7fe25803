// Acceptance suite: runs every criterion against the bundled fixtures and
// prints one PASS/FAIL line per check. Exit code 0 only when everything
// passes. Also reachable as `nlogic selftest`.
#include <cstring>
#include <iostream>
#include <string>

#include "nlogic/acceptance.hpp"

int main(int argc, char** argv) {
  std::string fixtures = "fixtures";
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--fixtures") && i + 1 < argc) fixtures = argv[++i];
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--print-goldens")) {
      std::cout << nlogic::golden_actuals();
      return 0;
    }
  }
  auto report = nlogic::run_acceptance(fixtures, only);
  std::cout << report.render(nlogic::ReportFormat::Human);
  std::cout << (report.all_pass() ? "ACCEPTANCE: all criteria pass\n"
                                  : "ACCEPTANCE: FAILURES PRESENT\n");
  return report.all_pass() ? 0 : 1;
}
