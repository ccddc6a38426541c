#pragma once

#include "aiimpact/ingest.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace aiimpact {

// Binarization rule applied to the ordinal automation score.
enum class Variant { lower, central, upper };

inline constexpr std::array<Variant, 3> kAllVariants{Variant::lower, Variant::central,
                                                     Variant::upper};

const char *variant_name(Variant v);

// lower: exposed only at score 1; central: score > 0.5; upper: score > 0.
int binarize(double score, Variant variant);

// Fraction of an occupation's tasks that binarize to exposed, in [0,1].
struct OccupationExposure {
    std::string soc_code; // digit string at 8, 6 or 5 digits
    double exposure;
};

// Simple average over one occupation's tasks; all records must share a soc8.
double occupation_exposure(std::span<const TaskExposureRecord> tasks, Variant variant);

// Groups all tasks by soc8 and computes per-occupation exposure.
std::vector<OccupationExposure> occupation_exposure_table(
    std::span<const TaskExposureRecord> tasks, Variant variant);

// Prefix group-by with simple (unweighted) averaging; target_digits is 6 or 5.
std::vector<OccupationExposure> rollup_soc(std::span<const OccupationExposure> occ,
                                           int target_digits);

struct IndustryExposure {
    std::string code; // naics4 before concordance, wiod code after
    double exposed_wage_bill_bb;
    double total_wage_bill_bb;
    double exposure_rate; // exposed / total, 0 when total is 0
};

// Wage-bill weighted aggregation to NAICS-4. Occupation exposure resolves via
// the 6-digit table first, then the 5-digit table, else zero. Industries with
// zero total wage bill get rate 0 and a line appended to `warnings`.
std::vector<IndustryExposure> industry_exposure(std::span<const OccupationExposure> occ6,
                                                std::span<const OccupationExposure> occ5,
                                                std::span<const AveragedWageBill> wages,
                                                std::vector<std::string> *warnings = nullptr);

} // namespace aiimpact
