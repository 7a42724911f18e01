#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epcont/model.hpp"

namespace epcont {

inline constexpr const char* version = "0.1.0";

using CsvCell = std::variant<double, std::string>;

struct CsvTable {
  std::vector<std::string> comments;  // written as "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<CsvCell>> rows;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Header lines naming the tool, the command, the parameters and the units.
std::vector<std::string> provenance(const ModelParams& p, std::string_view command);

void write_csv(std::ostream& out, const CsvTable& table);

/// Writes to path, or to stdout when path is empty or "-".
void write_csv_file(const std::string& path, const CsvTable& table);

}  // namespace epcont
