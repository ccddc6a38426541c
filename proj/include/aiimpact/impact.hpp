#pragma once

#include "aiimpact/ingest.hpp"
#include "aiimpact/shock.hpp"

#include <span>
#include <string>
#include <vector>

namespace aiimpact {

inline constexpr double kPjPerTwh = 3.6;
inline constexpr double kHoursPerYear = 8760.0;

// Reference-year intensity coefficients, held fixed under the shock.
struct Intensities {
    std::string wiod_code;
    double energy_per_output = 0;   // PJ per $BB
    double emissions_per_energy = 0; // ktCO2 per PJ
};

// energy/output and emissions/energy; zero denominators resolve to zero
// intensity with a diagnostic so the full industry sweep completes.
Intensities intensities(const IndustryAccount &account,
                        std::vector<std::string> *diagnostics = nullptr);

// Per-industry change triple, each quantity carried across all variants.
struct ImpactRow {
    std::string wiod_code;
    VariantTriple delta_output_bb;
    VariantTriple delta_energy_pj;
    VariantTriple delta_emissions_kt;
};

// dy = y * shock; dE = nu * dy; dC = mu * dE.
ImpactRow industry_impact(const ProductivityShock &shock, const IndustryAccount &account,
                          const Intensities &intens);

struct AggregateImpact {
    VariantTriple delta_output_bb;
    VariantTriple delta_energy_pj;
    VariantTriple delta_emissions_kt;
};

// Componentwise sums in fixed (input) order; duplicate codes are an error.
AggregateImpact aggregate(std::span<const ImpactRow> rows);

struct Comparator {
    std::string name;
    double energy_twh = 0;
};

struct ContextTotals {
    double national_capacity_gw = 0;
    double national_emissions_gtco2 = 0;
    std::vector<Comparator> comparators;
};

struct ComparatorRatio {
    std::string name;
    double ratio = 0;
};

struct ContextReport {
    double delta_energy_pj = 0;
    double delta_energy_twh = 0;
    double average_capacity_gw = 0;
    double capacity_share = 0;       // fraction of national capacity
    double emissions_share = 0;      // fraction of national emissions
    std::vector<ComparatorRatio> comparator_ratios;
};

// Central-estimate conversions: PJ -> TWh -> average GW, plus shares of the
// configured national totals and ratios against comparator energies.
ContextReport contextualize(double delta_energy_pj, double delta_emissions_kt,
                            const ContextTotals &context);

} // namespace aiimpact
