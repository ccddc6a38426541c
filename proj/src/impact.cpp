#include "aiimpact/impact.hpp"

#include "aiimpact/errors.hpp"

#include <set>

namespace aiimpact {

Intensities intensities(const IndustryAccount &account, std::vector<std::string> *diagnostics) {
    Intensities out;
    out.wiod_code = account.wiod_code;
    if (account.output_bb > 0) {
        out.energy_per_output = account.energy_pj / account.output_bb;
    } else {
        out.energy_per_output = 0;
        if (diagnostics)
            diagnostics->push_back("industry " + account.wiod_code +
                                   " has zero output; energy intensity set to 0");
    }
    if (account.energy_pj > 0) {
        out.emissions_per_energy = account.emissions_kt / account.energy_pj;
    } else {
        out.emissions_per_energy = 0;
        if (diagnostics)
            diagnostics->push_back("industry " + account.wiod_code +
                                   " has zero energy use; emissions intensity set to 0");
    }
    return out;
}

ImpactRow industry_impact(const ProductivityShock &shock, const IndustryAccount &account,
                          const Intensities &intens) {
    if (shock.wiod_code != account.wiod_code || shock.wiod_code != intens.wiod_code)
        throw ComputationError("industry_impact: industry code mismatch (" + shock.wiod_code +
                               " / " + account.wiod_code + " / " + intens.wiod_code + ")");
    ImpactRow row;
    row.wiod_code = shock.wiod_code;
    for (Variant v : kAllVariants) {
        const double dy = account.output_bb * shock.value.get(v);
        const double de = intens.energy_per_output * dy;
        const double dc = intens.emissions_per_energy * de;
        row.delta_output_bb.set(v, dy);
        row.delta_energy_pj.set(v, de);
        row.delta_emissions_kt.set(v, dc);
    }
    return row;
}

AggregateImpact aggregate(std::span<const ImpactRow> rows) {
    AggregateImpact agg;
    std::set<std::string> seen;
    for (const auto &row : rows) {
        if (!seen.insert(row.wiod_code).second)
            throw ComputationError("aggregate: duplicate industry code " + row.wiod_code);
        for (Variant v : kAllVariants) {
            agg.delta_output_bb.set(v, agg.delta_output_bb.get(v) + row.delta_output_bb.get(v));
            agg.delta_energy_pj.set(v, agg.delta_energy_pj.get(v) + row.delta_energy_pj.get(v));
            agg.delta_emissions_kt.set(v,
                                       agg.delta_emissions_kt.get(v) + row.delta_emissions_kt.get(v));
        }
    }
    return agg;
}

ContextReport contextualize(double delta_energy_pj, double delta_emissions_kt,
                            const ContextTotals &context) {
    if (context.national_capacity_gw <= 0)
        throw ValidationError("context national_capacity_gw must be positive");
    if (context.national_emissions_gtco2 <= 0)
        throw ValidationError("context national_emissions_gtco2 must be positive");
    ContextReport rep;
    rep.delta_energy_pj = delta_energy_pj;
    rep.delta_energy_twh = delta_energy_pj / kPjPerTwh;
    rep.average_capacity_gw = rep.delta_energy_twh * 1000.0 / kHoursPerYear;
    rep.capacity_share = rep.average_capacity_gw / context.national_capacity_gw;
    // 1 GtCO2 = 1e6 ktCO2
    rep.emissions_share = delta_emissions_kt / (context.national_emissions_gtco2 * 1e6);
    for (const auto &cmp : context.comparators) {
        if (cmp.energy_twh <= 0)
            throw ValidationError("comparator '" + cmp.name + "' must have positive energy");
        rep.comparator_ratios.push_back({cmp.name, rep.delta_energy_twh / cmp.energy_twh});
    }
    return rep;
}

} // namespace aiimpact
