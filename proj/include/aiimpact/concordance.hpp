#pragma once

#include "aiimpact/exposure.hpp"
#include "aiimpact/ingest.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace aiimpact {

// Winner-take-all many-to-one classification map.
struct IndustryMap {
    std::map<std::string, std::string> naics_to_isic;
    std::map<std::string, std::string> isic_to_wiod;

    const std::string &wiod_for_naics(const std::string &naics4) const;
    // Full WIOD code set of the grouping table, sorted.
    std::vector<std::string> wiod_codes() const;
};

// For each naics4, picks the isic2 with the largest occurrence count. Ties
// break to the lexicographically smallest isic2 and append a diagnostic.
std::map<std::string, std::string> resolve_crosswalk(std::span<const CrosswalkEntry> entries,
                                                     std::vector<std::string> *diagnostics = nullptr);

// Static (isic2, wiod_code) grouping table.
std::map<std::string, std::string> load_grouping(const std::filesystem::path &path);

// Sums exposed and total wage bills of NAICS industries within each WIOD code
// and recomputes the rate. Every code in the map appears in the output, with
// zeros when no NAICS industry contributes.
std::vector<IndustryExposure> aggregate_to_wiod(std::span<const IndustryExposure> naics,
                                                const IndustryMap &map);

} // namespace aiimpact
