#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace spinchain {

// Flat numeric table with `# key = value` provenance comments. Values are
// written as shortest-round-trip decimals (17 significant digits), so
// read_csv(write_csv(x)) == x bit-for-bit.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// %.17g rendering used for every numeric payload.
std::string format_full(double value);

std::string to_csv_string(const CsvTable& table);
void write_csv(const CsvTable& table, const std::filesystem::path& path);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace spinchain
