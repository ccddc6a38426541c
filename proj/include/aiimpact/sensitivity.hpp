#pragma once

#include "aiimpact/impact.hpp"
#include "aiimpact/shock.hpp"

#include <span>
#include <vector>

namespace aiimpact {

struct SensitivityCell {
    double task_fraction = 0;
    double labor_savings = 0;
    Variant variant = Variant::central;
    double delta_energy_pj = 0;
    double delta_emissions_kt = 0;
};

struct SensitivityGrid {
    std::vector<double> task_fraction_axis;
    std::vector<double> labor_savings_axis;
    std::vector<SensitivityCell> cells; // ordered by (task_fraction, labor_savings, variant)
};

// N evenly spaced points on [0,1].
std::vector<double> even_axis(int steps);

// Sweeps the two cost-savings parameters. The model is exactly linear in
// phi = a*s/divisor, so every cell is the reference aggregate scaled by the
// phi ratio; the unit tests check this against full pipeline recomputation.
SensitivityGrid sweep(const AggregateImpact &reference, const CostSavings &reference_cs,
                      std::span<const double> task_fraction_axis,
                      std::span<const double> labor_savings_axis);

// Per-industry (lower, central, upper) band, one entry per impact row.
struct VariantBand {
    std::string wiod_code;
    VariantTriple delta_output_bb;
    VariantTriple delta_energy_pj;
    VariantTriple delta_emissions_kt;
};

std::vector<VariantBand> variant_band(std::span<const ImpactRow> rows);

} // namespace aiimpact
