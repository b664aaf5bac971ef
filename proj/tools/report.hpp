#pragma once

#include "plcbound/io.hpp"
#include "plcbound/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace plcbound::cli {

enum class Format { Json, Table, Csv };

Format parse_format(const std::string& name);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  /// Rows for --format csv; the first row is the header.
  std::vector<std::vector<std::string>> csv_rows;

  bool all_pass() const;
  void add_check(std::string id, std::string label, std::string expected, std::string observed, bool pass);
};

Json to_json(const Report& report);
void render(const Report& report, Format format, std::ostream& out);

}  // namespace plcbound::cli
