#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hss/check.hpp"
#include "hss/space_spec.hpp"

namespace hss {

inline constexpr const char* kSchemaVersion = "1";

struct Timing {
  std::string suite;
  double seconds = 0;
};

struct Report {
  std::string command;
  std::optional<SpaceSpec> space;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;
  std::vector<Timing> timings;
  /// Command-specific payload: the model summary for `inspect`, the curvature table for `tube`.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// 0 when no check failed, 1 otherwise. Flagged and skipped checks do not fail a report.
int exit_code(const Report& r);
int exit_code(const std::vector<Report>& rs);

nlohmann::ordered_json space_to_json(const SpaceSpec& s);
nlohmann::ordered_json to_json(const CheckResult& c);
nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const std::vector<Report>& rs);

std::string to_text(const Report& r);
std::string to_text(const std::vector<Report>& rs);

/// Aligned UTF-8 table; the first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace hss
