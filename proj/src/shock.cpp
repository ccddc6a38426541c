#include "aiimpact/shock.hpp"

#include "aiimpact/errors.hpp"

namespace aiimpact {

double VariantTriple::get(Variant v) const {
    switch (v) {
    case Variant::lower:
        return lower;
    case Variant::central:
        return central;
    case Variant::upper:
        return upper;
    }
    return 0;
}

void VariantTriple::set(Variant v, double x) {
    switch (v) {
    case Variant::lower:
        lower = x;
        break;
    case Variant::central:
        central = x;
        break;
    case Variant::upper:
        upper = x;
        break;
    }
}

std::vector<WiodExposure> merge_variant_exposures(std::span<const IndustryExposure> lower,
                                                  std::span<const IndustryExposure> central,
                                                  std::span<const IndustryExposure> upper) {
    if (lower.size() != central.size() || central.size() != upper.size())
        throw ComputationError("variant exposure tables differ in size");
    std::vector<WiodExposure> out;
    out.reserve(central.size());
    for (std::size_t i = 0; i < central.size(); ++i) {
        if (lower[i].code != central[i].code || central[i].code != upper[i].code)
            throw ComputationError("variant exposure tables differ in industry order");
        WiodExposure e;
        e.wiod_code = central[i].code;
        e.exposed_wage_bill_bb = {lower[i].exposed_wage_bill_bb, central[i].exposed_wage_bill_bb,
                                  upper[i].exposed_wage_bill_bb};
        e.total_wage_bill_bb = central[i].total_wage_bill_bb;
        out.push_back(std::move(e));
    }
    return out;
}

double CostSavings::phi() const { return task_fraction * labor_savings / annualization_divisor; }

void CostSavings::validate() const {
    if (task_fraction < 0 || task_fraction > 1)
        throw ValidationError("cost_savings.task_fraction must be in [0,1]");
    if (labor_savings < 0 || labor_savings > 1)
        throw ValidationError("cost_savings.labor_savings must be in [0,1]");
    if (annualization_divisor <= 0)
        throw ValidationError("cost_savings.annualization_divisor must be positive");
    if (phi() >= 1)
        throw ValidationError("cost savings factor phi must be below 1");
}

std::vector<ProductivityShock> productivity_shock(std::span<const WiodExposure> exposure,
                                                  const std::map<std::string, double> &output_bb,
                                                  const CostSavings &cs) {
    cs.validate();
    const double phi = cs.phi();
    std::vector<ProductivityShock> out;
    out.reserve(exposure.size());
    for (const auto &e : exposure) {
        auto it = output_bb.find(e.wiod_code);
        if (it == output_bb.end())
            throw ValidationError("no output for industry " + e.wiod_code);
        const double y = it->second;
        ProductivityShock s;
        s.wiod_code = e.wiod_code;
        for (Variant v : kAllVariants) {
            const double exposed = e.exposed_wage_bill_bb.get(v);
            if (y <= 0) {
                if (exposed > 0)
                    throw ComputationError("industry " + e.wiod_code +
                                           " has zero output but nonzero exposed wage bill");
                s.value.set(v, 0.0);
            } else {
                s.value.set(v, phi * exposed / y);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<DomarWeight> domar_weights(const std::map<std::string, double> &output_bb) {
    double total = 0;
    for (const auto &[code, y] : output_bb)
        total += y;
    if (total <= 0)
        throw ComputationError("domar_weights: aggregate output is not positive");
    std::vector<DomarWeight> out;
    out.reserve(output_bb.size());
    for (const auto &[code, y] : output_bb)
        out.push_back({code, y / total});
    return out;
}

double aggregate_log_output_change(std::span<const ProductivityShock> shocks,
                                   std::span<const DomarWeight> weights, Variant variant) {
    if (shocks.size() != weights.size())
        throw ComputationError("aggregate_log_output_change: code set mismatch");
    std::map<std::string, double> lambda;
    for (const auto &w : weights)
        lambda[w.wiod_code] = w.lambda;
    double sum = 0;
    for (const auto &s : shocks) {
        auto it = lambda.find(s.wiod_code);
        if (it == lambda.end())
            throw ComputationError("aggregate_log_output_change: no Domar weight for " +
                                   s.wiod_code);
        sum += it->second * s.value.get(variant);
    }
    return sum;
}

} // namespace aiimpact
