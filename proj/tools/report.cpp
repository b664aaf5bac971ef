#include "report.hpp"

#include "plcbound/errors.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef PLCBOUND_VERSION
#define PLCBOUND_VERSION "0.0.0"
#endif

namespace plcbound::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  throw InvalidParameters("unknown format '" + name + "'");
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add_check(std::string id, std::string label, std::string expected, std::string observed,
                       bool pass) {
  checks.push_back(Check{std::move(id), std::move(label), std::move(expected), std::move(observed), pass, 0.0});
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"id", c.id}, {"label", c.label}, {"expected", c.expected},
                          {"observed", c.observed}, {"pass", c.pass}});
  }
  return Json{{"command", report.command},
              {"inputs", report.inputs},
              {"results", report.results},
              {"checks", std::move(checks)},
              {"all_pass", report.all_pass()},
              {"version", PLCBOUND_VERSION},
              {"generated_at", utc_timestamp()}};
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(report).dump(2) << "\n";
      return;
    case Format::Csv:
      for (const auto& row : report.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
      }
      return;
    case Format::Table:
      break;
  }

  out << report.command << "\n";
  for (const auto& [key, value] : report.results.items()) {
    if (value.is_object() || (value.is_array() && value.size() > 12)) {
      out << "  " << key << ": (" << value.size() << " entries, see --format json)\n";
    } else {
      out << "  " << key << ": " << scalar_text(value) << "\n";
    }
  }
  if (report.checks.empty()) return;
  out << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.label;
    if (c.seconds > 0.0) out << "  (" << std::fixed << std::setprecision(3) << c.seconds << "s)" << std::defaultfloat;
    out << "\n       expected: " << c.expected << "\n       observed: " << c.observed << "\n";
  }
}

}  // namespace plcbound::cli
