#include "qtau/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qtau {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, std::string label, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), std::move(label), pass, std::move(detail)});
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["paper_ref"] = c.label;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    j["checks"].push_back(std::move(entry));
  }
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::size_t name_width = 4;
  std::size_t label_width = 5;
  for (const auto& c : report.checks) {
    name_width = std::max(name_width, c.name.size());
    label_width = std::max(label_width, c.label.size());
  }
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << std::string(name_width - c.name.size(), ' ') << "  "
        << c.label << std::string(label_width - c.label.size(), ' ') << "  " << c.detail << "\n";
  }
  const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  out << report.suite << " (seed " << report.seed << "): " << passed << "/" << report.checks.size() << " passed\n";
  return out.str();
}

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report) : to_text(report);
}

}  // namespace qtau
