#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtau {

struct Check {
  std::string name;
  std::string label;  // short identity name, e.g. "hl-cauchy-identity"; serialized as "paper_ref"
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  void add(std::string name, std::string label, bool pass, std::string detail);
};

enum class ReportFormat { json, text };

/// Deterministic: checks in insertion order, fixed key order, trailing newline.
std::string to_json(const Report& report);
/// One line per check with aligned columns, then a summary line.
std::string to_text(const Report& report);
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace qtau
