#include "aiimpact/csv.hpp"

#include "aiimpact/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace aiimpact::csv {

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

Table parse_stream(std::istream &in, const std::string &source) {
    Table t;
    t.source = source;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        auto cells = split_line(line);
        if (!have_header) {
            t.header = std::move(cells);
            have_header = true;
        } else {
            if (cells.size() != t.header.size())
                throw ValidationError(source + ": row " +
                                      std::to_string(t.rows.size() + 1) + " has " +
                                      std::to_string(cells.size()) + " cells, expected " +
                                      std::to_string(t.header.size()));
            t.rows.push_back(std::move(cells));
        }
    }
    if (!have_header)
        throw ValidationError(source + ": empty file, no header row");
    return t;
}

} // namespace

std::size_t Table::column(const std::string &name) const {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw ValidationError(source + ": missing required column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

bool Table::has_column(const std::string &name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
}

Table read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file: " + path.string());
    return parse_stream(in, path.string());
}

Table read_string(const std::string &text, const std::string &source) {
    std::istringstream in(text);
    return parse_stream(in, source);
}

double parse_double(const Table &t, std::size_t row, std::size_t col) {
    const std::string &cell = t.rows.at(row - 1).at(col);
    double v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ValidationError(t.source + ": row " + std::to_string(row) + ", column '" +
                              t.header[col] + "': unparseable number '" + cell + "'");
    return v;
}

long parse_long(const Table &t, std::size_t row, std::size_t col) {
    const std::string &cell = t.rows.at(row - 1).at(col);
    long v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ValidationError(t.source + ": row " + std::to_string(row) + ", column '" +
                              t.header[col] + "': unparseable integer '" + cell + "'");
    return v;
}

} // namespace aiimpact::csv
