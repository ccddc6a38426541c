#pragma once

#include "aiimpact/exposure.hpp"
#include "aiimpact/ingest.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace aiimpact {

// One value per exposure variant; bound ordering lower <= central <= upper is
// an invariant everywhere these appear.
struct VariantTriple {
    double lower = 0;
    double central = 0;
    double upper = 0;

    double get(Variant v) const;
    void set(Variant v, double x);
};

// Industry exposure carried across all three variants after concordance.
// Total wage bill does not depend on the binarization rule.
struct WiodExposure {
    std::string wiod_code;
    VariantTriple exposed_wage_bill_bb;
    double total_wage_bill_bb = 0;
};

// Merges the three per-variant WIOD exposure tables into one keyed table.
std::vector<WiodExposure> merge_variant_exposures(std::span<const IndustryExposure> lower,
                                                  std::span<const IndustryExposure> central,
                                                  std::span<const IndustryExposure> upper);

// The two behavioral parameters and their product phi.
struct CostSavings {
    double task_fraction = 0.23;  // fraction of exposed tasks profitably performed by AI
    double labor_savings = 0.27;  // fraction of labor costs saved per such task
    double annualization_divisor = 1.0;

    double phi() const; // task_fraction * labor_savings / annualization_divisor
    void validate() const;
};

// Fractional productivity change per industry, per variant.
struct ProductivityShock {
    std::string wiod_code;
    VariantTriple value;
};

struct DomarWeight {
    std::string wiod_code;
    double lambda = 0;
};

// shock = phi * exposed_wage_bill / output, per variant. Output and wage bills
// must share $BB base-year units. Zero output with zero exposure yields a zero
// shock; zero output with nonzero exposure is an error.
std::vector<ProductivityShock> productivity_shock(std::span<const WiodExposure> exposure,
                                                  const std::map<std::string, double> &output_bb,
                                                  const CostSavings &cs);

// lambda_k = y_k / sum_j y_j
std::vector<DomarWeight> domar_weights(const std::map<std::string, double> &output_bb);

// First-order aggregate log-output change: sum_k lambda_k * shock_k for one variant.
double aggregate_log_output_change(std::span<const ProductivityShock> shocks,
                                   std::span<const DomarWeight> weights, Variant variant);

} // namespace aiimpact
