#include "lv/csv.hpp"

#include <fstream>
#include <sstream>

namespace lv {

std::vector<std::vector<Rat>> read_rational_csv(std::istream& in) {
  std::vector<std::vector<Rat>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Trim whitespace.
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    std::vector<Rat> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      auto a = cell.find_first_not_of(" \t");
      auto b = cell.find_last_not_of(" \t");
      if (a == std::string::npos) throw DomainError("empty CSV cell");
      row.push_back(parse_rat(cell.substr(a, b - a + 1)));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Rat>> read_rational_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open CSV file: " + path);
  return read_rational_csv(in);
}

void write_rational_csv(std::ostream& out, const std::vector<std::vector<Rat>>& rows) {
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << rat_str(row[i]);
    }
    out << '\n';
  }
}

}  // namespace lv
