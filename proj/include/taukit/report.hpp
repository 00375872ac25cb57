#pragma once

#include <string>
#include <vector>

namespace taukit {

enum class Verdict { Pass, Fail, Unknown };

struct ReportLine {
  std::string claim, expected, computed;
  Verdict verdict = Verdict::Fail;
};

struct Report {
  std::string scenario;
  std::vector<ReportLine> lines;
  double wall_seconds = 0;  // informational; never serialized

  bool all_pass() const;
  bool any_unknown() const;
};

// claim<TAB>expected<TAB>computed<TAB>verdict, one line per claim
std::string serialize_report(const Report& r);
std::string serialize_reports(const std::vector<Report>& rs);

// registry order is fixed; run_all executes on the given number of worker
// threads and always returns results in registry order
const std::vector<std::string>& scenario_names();
Report run_scenario(const std::string& name);
std::vector<Report> run_all_scenarios(int threads = 1);

// DOT graph for the scenario that draws one (currently ex2.9); empty when the
// scenario has no graph output
std::string scenario_dot(const std::string& name);

}  // namespace taukit
