#pragma once

#include <string>
#include <vector>

namespace lbp {

struct Check {
  std::string name;
  bool passed = false;
  long first_mismatch = -1;  // index (or row) of the first failing term; -1 when none
  std::string detail;
};

struct ScenarioReport {
  std::string id;
  std::vector<Check> checks;

  bool passed() const;
};

// csv: header "scenario,check,status,first_mismatch,detail", one line per check.
// json: {"scenario", "passed", "checks": [{name, passed, first_mismatch, detail}]}.
std::string render_report(const ScenarioReport& report, const std::string& format);

}  // namespace lbp
