#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lv/numbers.hpp"

namespace lv {

// Rows of rationals. Entries are `a/b` or plain integers, comma separated,
// one row per line; `#` starts a comment; blank lines skipped.
std::vector<std::vector<Rat>> read_rational_csv(std::istream& in);
std::vector<std::vector<Rat>> read_rational_csv_file(const std::string& path);

void write_rational_csv(std::ostream& out, const std::vector<std::vector<Rat>>& rows);

}  // namespace lv
