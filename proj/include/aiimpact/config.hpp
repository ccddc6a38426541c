#pragma once

#include "aiimpact/impact.hpp"
#include "aiimpact/ingest.hpp"
#include "aiimpact/shock.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace aiimpact {

// Parsed run configuration. Relative dataset paths are resolved against the
// directory containing the config file.
struct RunConfig {
    std::filesystem::path tasks;
    std::filesystem::path wagebills;
    std::filesystem::path deflator;
    std::filesystem::path accounts;
    std::filesystem::path accounts_history; // optional; needed by `project`
    std::filesystem::path crosswalk;
    std::filesystem::path grouping;
    std::filesystem::path out_dir = "out";

    int reference_year = 2014;
    int deflator_base_year = 2017;
    YearRange wage_window{2019, 2022};
    YearRange projection_window{2000, 2014};
    int projection_target_year = 2023;

    CostSavings cost_savings;
    ContextTotals context;

    // Checks that all referenced dataset files exist.
    void validate(bool need_history = false) const;
};

// Flat key=value file, '#' comments. Unknown keys are an error.
RunConfig load_run_config(const std::filesystem::path &path);

// Applies one "key=value" override (the CLI maps flags through this).
void apply_override(RunConfig &config, const std::string &key, const std::string &value,
                    const std::filesystem::path &base_dir);

YearRange parse_year_range(const std::string &text);

} // namespace aiimpact
