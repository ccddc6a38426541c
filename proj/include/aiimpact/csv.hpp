#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace aiimpact::csv {

// Comma-delimited table with one header row. Lines starting with '#' are
// treated as comments and skipped (exports carry a provenance comment line).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string source; // path, for error messages

    // Column index by name; throws ValidationError if absent.
    std::size_t column(const std::string &name) const;
    bool has_column(const std::string &name) const;
};

Table read_file(const std::filesystem::path &path);
Table read_string(const std::string &text, const std::string &source = "<string>");

// Cell parsers that report file/row/column on failure. row is the 1-based
// data row (header excluded), matching what a user sees in the file.
double parse_double(const Table &t, std::size_t row, std::size_t col);
long parse_long(const Table &t, std::size_t row, std::size_t col);

} // namespace aiimpact::csv
