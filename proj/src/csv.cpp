#include "spinchain/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spinchain/errors.hpp"

namespace spinchain {

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.comments) {
    out << "# " << key << " = " << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_full(row[c]);
    }
    out << "\n";
  }
  return out.str();
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open for writing", path.string());
  file << to_csv_string(table);
  if (!file) throw IoError("write failed", path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open for reading", path.string());
  CsvTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        auto trim = [](std::string s) {
          const auto b = s.find_first_not_of(' ');
          const auto e = s.find_last_not_of(' ');
          return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        table.comments.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
      }
      continue;
    }
    std::stringstream cells(line);
    std::string cell;
    if (!header_seen) {
      while (std::getline(cells, cell, ',')) table.columns.push_back(cell);
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace spinchain
