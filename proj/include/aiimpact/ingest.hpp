#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace aiimpact {

// One task's ordinal automation score, attached to an 8-digit occupation.
// SOC codes are normalized to digit-only strings at load ("11-1011.00" ->
// "11101100") so coarser granularities are pure prefix arithmetic.
struct TaskExposureRecord {
    std::string task_id;
    std::string soc8; // 8 digits
    double automation_score; // one of {0, 0.25, 0.5, 0.75, 1}
};

// Annual wage bill for an (occupation, 4-digit industry, year) cell, nominal USD.
struct WageBillRecord {
    std::string soc_code; // 5 or 6 digits after normalization
    std::string naics4;
    int year;
    double wage_bill_usd;
};

// GDP deflator index by year; the base year defines 1.0-equivalent purchasing power.
struct DeflatorSeries {
    std::map<int, double> index;
    int base_year = 2017;

    // amount * index(base_year) / index(year)
    double deflate(double amount, int year) const;
};

// One WIOD-style industry-year row.
struct IndustryAccount {
    std::string wiod_code;
    int year;
    double output_bb;    // billions of base-year USD
    double energy_pj;    // petajoules
    double emissions_kt; // kilotonnes CO2
};

struct CrosswalkEntry {
    std::string naics4;
    std::string isic2;
    long occurrence_count;
};

// Mean deflated wage bill for one (occupation, industry) cell, in $BB.
struct AveragedWageBill {
    std::string soc_code;
    std::string naics4;
    double wage_bill_bb;
};

struct YearRange {
    int first = 0;
    int last = 0;
};

bool is_admissible_score(double score);

// "11-1011.00" / "11-1011" / "111011" -> digit string; throws on malformed codes.
std::string normalize_soc(const std::string &code);

std::vector<TaskExposureRecord> load_tasks(const std::filesystem::path &path);
std::vector<WageBillRecord> load_wage_bills(const std::filesystem::path &path);
DeflatorSeries load_deflator(const std::filesystem::path &path, int base_year = 2017);
std::vector<IndustryAccount> load_accounts(const std::filesystem::path &path);
std::vector<CrosswalkEntry> load_crosswalk(const std::filesystem::path &path);

// Deflates each record to base-year USD, averages each (soc, naics4) cell over
// the years it is present within the window, and converts to $BB.
std::vector<AveragedWageBill> average_wage_bills(std::span<const WageBillRecord> records,
                                                 const DeflatorSeries &series,
                                                 YearRange window);

} // namespace aiimpact
