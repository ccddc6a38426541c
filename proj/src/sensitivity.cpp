#include "aiimpact/sensitivity.hpp"

#include "aiimpact/errors.hpp"

namespace aiimpact {

std::vector<double> even_axis(int steps) {
    if (steps < 2)
        throw ValidationError("sensitivity axis needs at least 2 points");
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        axis[static_cast<std::size_t>(i)] = static_cast<double>(i) / (steps - 1);
    return axis;
}

namespace {

void check_axis(std::span<const double> axis, const char *name) {
    if (axis.empty())
        throw ValidationError(std::string("empty sensitivity axis: ") + name);
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (axis[i] < 0 || axis[i] > 1)
            throw ValidationError(std::string(name) + " axis point outside [0,1]");
        if (i > 0 && axis[i] <= axis[i - 1])
            throw ValidationError(std::string(name) + " axis must be strictly increasing");
    }
}

} // namespace

SensitivityGrid sweep(const AggregateImpact &reference, const CostSavings &reference_cs,
                      std::span<const double> task_fraction_axis,
                      std::span<const double> labor_savings_axis) {
    check_axis(task_fraction_axis, "task_fraction");
    check_axis(labor_savings_axis, "labor_savings");
    reference_cs.validate();
    const double ref_phi = reference_cs.phi();
    if (ref_phi <= 0)
        throw ComputationError("sweep: reference phi must be positive");

    SensitivityGrid grid;
    grid.task_fraction_axis.assign(task_fraction_axis.begin(), task_fraction_axis.end());
    grid.labor_savings_axis.assign(labor_savings_axis.begin(), labor_savings_axis.end());
    grid.cells.reserve(task_fraction_axis.size() * labor_savings_axis.size() * 3);
    for (double a : task_fraction_axis) {
        for (double s : labor_savings_axis) {
            const double scale = (a * s / reference_cs.annualization_divisor) / ref_phi;
            for (Variant v : kAllVariants) {
                SensitivityCell cell;
                cell.task_fraction = a;
                cell.labor_savings = s;
                cell.variant = v;
                cell.delta_energy_pj = scale * reference.delta_energy_pj.get(v);
                cell.delta_emissions_kt = scale * reference.delta_emissions_kt.get(v);
                grid.cells.push_back(cell);
            }
        }
    }
    return grid;
}

std::vector<VariantBand> variant_band(std::span<const ImpactRow> rows) {
    std::vector<VariantBand> out;
    out.reserve(rows.size());
    for (const auto &row : rows)
        out.push_back({row.wiod_code, row.delta_output_bb, row.delta_energy_pj,
                       row.delta_emissions_kt});
    return out;
}

} // namespace aiimpact
