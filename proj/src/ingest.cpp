#include "aiimpact/ingest.hpp"

#include "aiimpact/csv.hpp"
#include "aiimpact/errors.hpp"

#include <algorithm>
#include <cctype>

namespace aiimpact {

namespace {

[[noreturn]] void row_error(const csv::Table &t, std::size_t row, const std::string &msg) {
    throw ValidationError(t.source + ": row " + std::to_string(row) + ": " + msg);
}

} // namespace

bool is_admissible_score(double score) {
    return score == 0.0 || score == 0.25 || score == 0.5 || score == 0.75 || score == 1.0;
}

std::string normalize_soc(const std::string &code) {
    std::string digits;
    for (char c : code) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digits += c;
        else if (c != '-' && c != '.')
            throw ValidationError("malformed SOC code '" + code + "'");
    }
    if (digits.size() < 2 || digits.size() > 8)
        throw ValidationError("malformed SOC code '" + code + "'");
    return digits;
}

double DeflatorSeries::deflate(double amount, int year) const {
    auto it = index.find(year);
    if (it == index.end())
        throw ValidationError("deflator series has no index for year " + std::to_string(year));
    auto base = index.find(base_year);
    if (base == index.end())
        throw ValidationError("deflator series has no index for base year " +
                              std::to_string(base_year));
    return amount * base->second / it->second;
}

std::vector<TaskExposureRecord> load_tasks(const std::filesystem::path &path) {
    auto t = csv::read_file(path);
    auto c_id = t.column("task_id");
    auto c_soc = t.column("soc8");
    auto c_score = t.column("automation_score");
    std::vector<TaskExposureRecord> out;
    out.reserve(t.rows.size());
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        TaskExposureRecord rec;
        rec.task_id = t.rows[r - 1][c_id];
        rec.soc8 = normalize_soc(t.rows[r - 1][c_soc]);
        if (rec.soc8.size() != 8)
            row_error(t, r, "soc8 code '" + t.rows[r - 1][c_soc] + "' is not 8 digits");
        rec.automation_score = csv::parse_double(t, r, c_score);
        if (!is_admissible_score(rec.automation_score))
            row_error(t, r, "automation_score " + t.rows[r - 1][c_score] +
                                " is not one of {0, 0.25, 0.5, 0.75, 1}");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<WageBillRecord> load_wage_bills(const std::filesystem::path &path) {
    auto t = csv::read_file(path);
    auto c_soc = t.column("soc_code");
    auto c_naics = t.column("naics4");
    auto c_year = t.column("year");
    auto c_wage = t.column("wage_bill_usd");
    std::vector<WageBillRecord> out;
    out.reserve(t.rows.size());
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        WageBillRecord rec;
        rec.soc_code = normalize_soc(t.rows[r - 1][c_soc]);
        if (rec.soc_code.size() != 5 && rec.soc_code.size() != 6)
            row_error(t, r, "soc_code '" + t.rows[r - 1][c_soc] + "' is not 5 or 6 digits");
        rec.naics4 = t.rows[r - 1][c_naics];
        rec.year = static_cast<int>(csv::parse_long(t, r, c_year));
        rec.wage_bill_usd = csv::parse_double(t, r, c_wage);
        if (rec.wage_bill_usd < 0)
            row_error(t, r, "negative wage bill");
        out.push_back(std::move(rec));
    }
    return out;
}

DeflatorSeries load_deflator(const std::filesystem::path &path, int base_year) {
    auto t = csv::read_file(path);
    auto c_year = t.column("year");
    auto c_index = t.column("index");
    DeflatorSeries s;
    s.base_year = base_year;
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        int year = static_cast<int>(csv::parse_long(t, r, c_year));
        double idx = csv::parse_double(t, r, c_index);
        if (idx <= 0)
            row_error(t, r, "deflator index must be positive");
        s.index[year] = idx;
    }
    if (!s.index.count(base_year))
        throw ValidationError(t.source + ": base year " + std::to_string(base_year) +
                              " absent from deflator series");
    return s;
}

std::vector<IndustryAccount> load_accounts(const std::filesystem::path &path) {
    auto t = csv::read_file(path);
    auto c_code = t.column("wiod_code");
    auto c_year = t.column("year");
    auto c_out = t.column("output_bb_usd2017");
    auto c_energy = t.column("energy_pj");
    auto c_emis = t.column("emissions_ktco2");
    std::vector<IndustryAccount> out;
    out.reserve(t.rows.size());
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        IndustryAccount rec;
        rec.wiod_code = t.rows[r - 1][c_code];
        if (rec.wiod_code == "U")
            row_error(t, r, "industry code U is not part of the 55-industry set");
        rec.year = static_cast<int>(csv::parse_long(t, r, c_year));
        rec.output_bb = csv::parse_double(t, r, c_out);
        rec.energy_pj = csv::parse_double(t, r, c_energy);
        rec.emissions_kt = csv::parse_double(t, r, c_emis);
        if (rec.output_bb < 0 || rec.energy_pj < 0 || rec.emissions_kt < 0)
            row_error(t, r, "negative account value");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CrosswalkEntry> load_crosswalk(const std::filesystem::path &path) {
    auto t = csv::read_file(path);
    auto c_naics = t.column("naics4");
    auto c_isic = t.column("isic2");
    auto c_count = t.column("occurrence_count");
    std::vector<CrosswalkEntry> out;
    out.reserve(t.rows.size());
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        CrosswalkEntry rec;
        rec.naics4 = t.rows[r - 1][c_naics];
        rec.isic2 = t.rows[r - 1][c_isic];
        rec.occurrence_count = csv::parse_long(t, r, c_count);
        if (rec.occurrence_count < 0)
            row_error(t, r, "negative occurrence_count");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<AveragedWageBill> average_wage_bills(std::span<const WageBillRecord> records,
                                                 const DeflatorSeries &series,
                                                 YearRange window) {
    if (window.first > window.last)
        throw ValidationError("empty wage averaging window");
    // cell -> year -> deflated total; duplicate rows within a year are summed
    std::map<std::pair<std::string, std::string>, std::map<int, double>> cells;
    for (const auto &rec : records) {
        if (rec.year < window.first || rec.year > window.last)
            continue;
        cells[{rec.soc_code, rec.naics4}][rec.year] +=
            series.deflate(rec.wage_bill_usd, rec.year);
    }
    std::vector<AveragedWageBill> out;
    out.reserve(cells.size());
    for (const auto &[key, by_year] : cells) {
        // cells absent in some years average over present years only
        double sum = 0;
        for (const auto &[year, v] : by_year)
            sum += v;
        out.push_back({key.first, key.second, sum / by_year.size() / 1e9});
    }
    return out;
}

} // namespace aiimpact
