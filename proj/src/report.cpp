#include "taukit/report.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace taukit {

namespace {

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "unknown";
  }
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& l : lines)
    if (l.verdict != Verdict::Pass) return false;
  return true;
}

bool Report::any_unknown() const {
  for (const auto& l : lines)
    if (l.verdict == Verdict::Unknown) return true;
  return false;
}

std::string serialize_report(const Report& r) {
  std::string out;
  for (const auto& l : r.lines)
    out += l.claim + "\t" + l.expected + "\t" + l.computed + "\t" + verdict_str(l.verdict) + "\n";
  return out;
}

std::string serialize_reports(const std::vector<Report>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += "## " + r.scenario + "\n";
    out += serialize_report(r);
  }
  return out;
}

Report run_scenario_impl(const std::string& name);  // scenarios.cpp

Report run_scenario(const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = run_scenario_impl(name);
  r.scenario = name;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> run_all_scenarios(int threads) {
  const auto& names = scenario_names();
  std::vector<Report> out(names.size());
  if (threads < 1) threads = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
      out[i] = run_scenario(names[i]);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace taukit
