#pragma once

#include "aiimpact/pipeline.hpp"
#include "aiimpact/projection.hpp"
#include "aiimpact/sensitivity.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aiimpact {

enum class TableKind { selected_industries, full_industry, aggregate_summary };

enum class TableOrder { by_impact, by_code };

// FNV-1a over the file bytes, hex string; pinned into export headers so a
// result file names the exact inputs that produced it.
std::string file_digest(const std::filesystem::path &path);

// "# aiimpact <version> config=<digest> inputs=<digest,...>"
std::string provenance_line(const RunConfig &config,
                            const std::filesystem::path &config_path);

struct ExportOptions {
    std::filesystem::path out_dir;
    std::string provenance;
    std::optional<Variant> only; // restrict per-variant CSV rows; all when unset
};

// Writes industry_impacts.csv, aggregate.csv, aggregate.json plus the audit
// intermediates (exposure_naics.csv, exposure_wiod.csv, naics_wiod_map.csv).
void write_bundle(const ResultBundle &bundle, const ExportOptions &opts);

void write_sensitivity(const SensitivityGrid &grid, const ExportOptions &opts);

// projected_accounts.csv (same schema as the accounts input), fit
// diagnostics, projected impacts and aggregate.
void write_projection(const ProjectedImpact &proj, const ExportOptions &opts);

// Formatted text table; numbers are rendered from the bundle values only.
// The full table lists central values with [lower, upper] brackets at 5
// decimals; the selected table uses 3 decimals.
std::string render_table(const ResultBundle &bundle, TableKind kind,
                         TableOrder order = TableOrder::by_impact);

} // namespace aiimpact
