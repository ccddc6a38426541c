#pragma once

#include "aiimpact/concordance.hpp"
#include "aiimpact/config.hpp"
#include "aiimpact/impact.hpp"
#include "aiimpact/shock.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace aiimpact {

// Everything the run produces, ordered deterministically (industries sorted
// by WIOD code).
struct ResultBundle {
    // audit intermediates
    std::array<std::vector<IndustryExposure>, 3> naics_exposure; // indexed by Variant
    std::vector<WiodExposure> wiod_exposure;
    IndustryMap industry_map;

    std::vector<IndustryAccount> reference_accounts;
    std::map<std::string, double> output_bb;
    std::vector<Intensities> intensity_table;

    std::vector<ProductivityShock> shocks;
    std::vector<DomarWeight> domar;
    VariantTriple log_output_change;

    std::vector<ImpactRow> rows;
    AggregateImpact totals;
    ContextReport context;

    std::vector<std::string> diagnostics;
    CostSavings cost_savings;
};

// Runs ingest -> exposure -> concordance -> shock -> impact on the configured
// datasets. Deterministic: identical inputs produce an identical bundle.
ResultBundle run(const RunConfig &config);

} // namespace aiimpact
