#include "epcont/csv.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace epcont {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> provenance(const ModelParams& p, std::string_view command) {
  return {
      "epcont " + std::string(version) + " " + std::string(command),
      "alpha=" + format_double(p.alpha) + " beta=" + format_double(p.beta) + " q=" + format_double(p.q),
      "units: hbar=1, 2m=1, E=k^2",
  };
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* d = std::get_if<double>(&row[i])) {
        out << format_double(*d);
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  if (path.empty() || path == "-") {
    write_csv(std::cout, table);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(file, table);
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace epcont
