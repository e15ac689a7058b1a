#include "hss/report.hpp"

#include <iomanip>
#include <sstream>

#include "hss/anchors.hpp"
#include "hss/reference_tables.hpp"

namespace hss {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

int exit_code(const Report& r) { return all_passed(r.checks) ? 0 : 1; }

int exit_code(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (exit_code(r) != 0) return 1;
  return 0;
}

nlohmann::ordered_json space_to_json(const SpaceSpec& s) {
  return {{"spec", to_string(s)},
          {"family", std::string(family_name(s.family))},
          {"rank", s.rank},
          {"node", s.node},
          {"requested_node", s.requested_node()},
          {"label", reference::space_label(s.family, s.rank, s.node)}};
}

nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j{{"id", c.id},
                   {"anchor", std::string(anchor_for(c.id))},
                   {"status", std::string(to_string(c.status))},
                   {"instances", c.instances}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j{{"schema_version", kSchemaVersion}, {"command", r.command}};
  j["space"] = r.space ? space_to_json(*r.space) : nlohmann::ordered_json(nullptr);
  j["notes"] = r.notes;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["timings"] = nlohmann::ordered_json::array();
  for (const auto& t : r.timings) j["timings"].push_back({{"suite", t.suite}, {"seconds", t.seconds}});
  j["details"] = r.details;
  j["exit_code"] = exit_code(r);
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Report>& rs) {
  nlohmann::ordered_json j{{"schema_version", kSchemaVersion}, {"command", "report"}};
  j["reports"] = nlohmann::ordered_json::array();
  std::size_t fails = 0;
  for (const auto& r : rs) {
    j["reports"].push_back(to_json(r));
    if (exit_code(r) != 0) ++fails;
  }
  j["summary"] = {{"spaces", rs.size()}, {"failing_spaces", fails}};
  j["exit_code"] = exit_code(rs);
  return j;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++w;
    return w;
  };
  std::vector<std::size_t> cols;
  for (const auto& row : rows) {
    if (cols.size() < row.size()) cols.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) cols[i] = std::max(cols[i], width(row[i]));
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(cols[i] - width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void details_text(const nlohmann::ordered_json& d, std::ostringstream& os) {
  for (const auto& [key, value] : d.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header;
      for (const auto& [k, _] : value.front().items()) header.push_back(k);
      rows.push_back(header);
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& h : header) {
          const auto& cell = row.at(h);
          cells.push_back(scalar_text(cell));
        }
        rows.push_back(std::move(cells));
      }
      os << key << ":\n" << format_table(rows);
    } else if (value.is_array() && !value.empty() && value.front().is_array()) {
      os << key << " (" << value.size() << "):\n";
      for (const auto& row : value) {
        std::string line;
        for (const auto& cell : row) line += (line.empty() ? "" : ", ") + scalar_text(cell);
        os << "  (" << line << ")\n";
      }
    } else if (value.is_array()) {
      std::string line;
      for (const auto& cell : value) line += (line.empty() ? "" : ", ") + scalar_text(cell);
      os << key << ": (" << line << ")\n";
    } else if (value.is_object()) {
      std::string line;
      for (const auto& [k, v] : value.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(v);
      os << key << ": " << line << '\n';
    } else {
      os << key << ": " << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (r.space) os << ' ' << to_string(*r.space) << "  " << reference::space_label(r.space->family, r.space->rank, r.space->node);
  os << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (!r.details.empty()) details_text(r.details, os);
  if (!r.checks.empty()) {
    std::vector<std::vector<std::string>> rows{{"status", "check", "anchor", "n", "witness"}};
    std::size_t counts[4] = {};
    for (const auto& c : r.checks) {
      rows.push_back({std::string(to_string(c.status)), c.id, std::string(anchor_for(c.id)),
                      std::to_string(c.instances), c.witness});
      ++counts[static_cast<int>(c.status)];
    }
    os << format_table(rows);
    os << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " flagged, " << counts[3] << " skipped\n";
  }
  if (!r.timings.empty()) {
    os << "timings:";
    for (const auto& t : r.timings) os << ' ' << t.suite << '=' << std::fixed << std::setprecision(3) << t.seconds << 's';
    os << '\n';
  }
  return os.str();
}

std::string to_text(const std::vector<Report>& rs) {
  std::ostringstream os;
  std::vector<std::vector<std::string>> rows{{"space", "label", "pass", "fail", "flagged", "skipped"}};
  for (const auto& r : rs) {
    os << to_text(r) << '\n';
    std::size_t counts[4] = {};
    for (const auto& c : r.checks) ++counts[static_cast<int>(c.status)];
    rows.push_back({r.space ? to_string(*r.space) : "-",
                    r.space ? reference::space_label(r.space->family, r.space->rank, r.space->node) : "-",
                    std::to_string(counts[0]), std::to_string(counts[1]), std::to_string(counts[2]),
                    std::to_string(counts[3])});
  }
  os << "summary:\n" << format_table(rows);
  return os.str();
}

}  // namespace hss
