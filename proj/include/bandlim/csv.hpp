#pragma once

// Small CSV helpers shared by the CLI and the experiment harness.  Doubles
// round-trip exactly (%.17g).

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandlim::csv {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_rows(const std::string& path, const std::string& header,
                       const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  if (!header.empty()) os << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << fmt(row[i]);
    }
    os << "\n";
  }
}

/// Reads numeric CSV rows; a non-numeric first line is treated as a header
/// and skipped.
inline std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool ok = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
      } catch (...) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw std::runtime_error("bad CSV row in " + path + ": " + line);
    }
    first = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bandlim::csv
