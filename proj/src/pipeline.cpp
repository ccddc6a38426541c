#include "aiimpact/pipeline.hpp"

#include "aiimpact/errors.hpp"

#include <algorithm>

namespace aiimpact {

ResultBundle run(const RunConfig &config) {
    config.validate();
    ResultBundle bundle;
    bundle.cost_savings = config.cost_savings;

    auto tasks = load_tasks(config.tasks);
    auto wages_raw = load_wage_bills(config.wagebills);
    auto deflator = load_deflator(config.deflator, config.deflator_base_year);
    auto accounts = load_accounts(config.accounts);
    auto crosswalk = load_crosswalk(config.crosswalk);

    bundle.industry_map.isic_to_wiod = load_grouping(config.grouping);
    bundle.industry_map.naics_to_isic = resolve_crosswalk(crosswalk, &bundle.diagnostics);

    auto wages = average_wage_bills(wages_raw, deflator, config.wage_window);

    std::array<std::vector<IndustryExposure>, 3> wiod_by_variant;
    for (Variant v : kAllVariants) {
        auto occ8 = occupation_exposure_table(tasks, v);
        auto occ6 = rollup_soc(occ8, 6);
        auto occ5 = rollup_soc(occ6, 5);
        auto idx = static_cast<std::size_t>(v);
        bundle.naics_exposure[idx] = industry_exposure(occ6, occ5, wages,
                                                       v == Variant::central
                                                           ? &bundle.diagnostics
                                                           : nullptr);
        wiod_by_variant[idx] = aggregate_to_wiod(bundle.naics_exposure[idx],
                                                 bundle.industry_map);
    }
    bundle.wiod_exposure = merge_variant_exposures(
        wiod_by_variant[static_cast<std::size_t>(Variant::lower)],
        wiod_by_variant[static_cast<std::size_t>(Variant::central)],
        wiod_by_variant[static_cast<std::size_t>(Variant::upper)]);

    for (const auto &acc : accounts) {
        if (acc.year != config.reference_year)
            continue;
        bundle.reference_accounts.push_back(acc);
    }
    if (bundle.reference_accounts.empty())
        throw ValidationError("accounts file has no rows for reference year " +
                              std::to_string(config.reference_year));
    std::sort(bundle.reference_accounts.begin(), bundle.reference_accounts.end(),
              [](const auto &a, const auto &b) { return a.wiod_code < b.wiod_code; });
    for (const auto &acc : bundle.reference_accounts) {
        if (!bundle.output_bb.emplace(acc.wiod_code, acc.output_bb).second)
            throw ValidationError("duplicate account row for industry " + acc.wiod_code +
                                  " in reference year");
    }
    for (const auto &e : bundle.wiod_exposure)
        if (!bundle.output_bb.count(e.wiod_code))
            throw ValidationError("no reference-year account for industry " + e.wiod_code);

    bundle.shocks = productivity_shock(bundle.wiod_exposure, bundle.output_bb,
                                       config.cost_savings);
    bundle.domar = domar_weights(bundle.output_bb);
    for (Variant v : kAllVariants)
        bundle.log_output_change.set(v,
                                     aggregate_log_output_change(bundle.shocks, bundle.domar, v));

    std::map<std::string, const IndustryAccount *> by_code;
    for (const auto &acc : bundle.reference_accounts)
        by_code[acc.wiod_code] = &acc;
    for (const auto &shock : bundle.shocks) {
        const auto &acc = *by_code.at(shock.wiod_code);
        auto intens = intensities(acc, &bundle.diagnostics);
        bundle.rows.push_back(industry_impact(shock, acc, intens));
        bundle.intensity_table.push_back(intens);
    }
    bundle.totals = aggregate(bundle.rows);
    bundle.context = contextualize(bundle.totals.delta_energy_pj.central,
                                   bundle.totals.delta_emissions_kt.central, config.context);
    return bundle;
}

} // namespace aiimpact
