#include "lbp/report.hpp"

#include "lbp/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace lbp {

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_report(const ScenarioReport& report, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "scenario,check,status,first_mismatch,detail\n";
    for (const auto& c : report.checks)
      os << csv_field(report.id) << ',' << csv_field(c.name) << ',' << (c.passed ? "PASS" : "FAIL") << ','
         << (c.first_mismatch < 0 ? std::string() : std::to_string(c.first_mismatch)) << ',' << csv_field(c.detail) << '\n';
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["scenario"] = report.id;
    j["passed"] = report.passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["first_mismatch"] = c.first_mismatch < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.first_mismatch);
      e["detail"] = c.detail;
      j["checks"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  throw UsageError("unknown report format '" + format + "' (expected csv or json)");
}

}  // namespace lbp
