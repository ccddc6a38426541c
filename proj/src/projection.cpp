#include "aiimpact/projection.hpp"

#include "aiimpact/errors.hpp"

#include <array>
#include <cmath>
#include <set>

namespace aiimpact {

const char *account_variable_name(AccountVariable v) {
    switch (v) {
    case AccountVariable::output:
        return "output";
    case AccountVariable::energy:
        return "energy";
    case AccountVariable::emissions:
        return "emissions";
    }
    return "?";
}

TrendFit fit_loglinear(const std::map<int, double> &series, YearRange window,
                       const std::string &wiod_code, AccountVariable variable) {
    std::vector<std::pair<double, double>> pts; // (year, ln value)
    for (const auto &[year, value] : series) {
        if (year < window.first || year > window.last)
            continue;
        if (value > 0)
            pts.emplace_back(static_cast<double>(year), std::log(value));
    }
    if (pts.size() < 2)
        throw ComputationError("unfittable series: industry '" + wiod_code + "' variable '" +
                               account_variable_name(variable) +
                               "' has fewer than 2 positive points in window");

    TrendFit fit;
    fit.wiod_code = wiod_code;
    fit.variable = variable;
    fit.points_used = static_cast<int>(pts.size());
    fit.center_year = (window.first + window.last) / 2.0;

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (auto [year, ln] : pts) {
        const double x = year - fit.center_year;
        sx += x;
        sy += ln;
        sxx += x * x;
        sxy += x * ln;
        syy += ln * ln;
    }
    const double n = static_cast<double>(pts.size());
    const double den = n * sxx - sx * sx;
    if (den == 0)
        throw ComputationError("unfittable series: industry '" + wiod_code +
                               "' degenerate year spread");
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;

    double ss_res = 0;
    const double mean = sy / n;
    double ss_tot = 0;
    for (auto [year, ln] : pts) {
        const double x = year - fit.center_year;
        const double resid = ln - (fit.intercept + fit.slope * x);
        ss_res += resid * resid;
        ss_tot += (ln - mean) * (ln - mean);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

double project(const TrendFit &fit, int target_year) {
    return std::exp(fit.intercept + fit.slope * (target_year - fit.center_year));
}

ProjectedImpact projected_impact(std::span<const IndustryAccount> history,
                                 std::span<const WiodExposure> exposure, const CostSavings &cs,
                                 YearRange window, int target_year) {
    cs.validate();
    // industry -> variable series
    std::map<std::string, std::array<std::map<int, double>, 3>> series;
    for (const auto &acc : history) {
        auto &s = series[acc.wiod_code];
        s[0][acc.year] = acc.output_bb;
        s[1][acc.year] = acc.energy_pj;
        s[2][acc.year] = acc.emissions_kt;
    }

    ProjectedImpact result;
    std::set<std::string> excluded;
    for (const auto &[code, vars] : series) {
        IndustryAccount proj;
        proj.wiod_code = code;
        proj.year = target_year;
        bool ok = true;
        std::array<double, 3> values{};
        for (int i = 0; i < 3 && ok; ++i) {
            const auto variable = static_cast<AccountVariable>(i);
            try {
                auto fit = fit_loglinear(vars[static_cast<std::size_t>(i)], window, code,
                                         variable);
                values[static_cast<std::size_t>(i)] = project(fit, target_year);
                result.fits.push_back(std::move(fit));
            } catch (const ComputationError &e) {
                result.diagnostics.push_back(std::string(e.what()) +
                                             "; industry excluded from projected impact");
                excluded.insert(code);
                ok = false;
            }
        }
        if (!ok)
            continue;
        proj.output_bb = values[0];
        proj.energy_pj = values[1];
        proj.emissions_kt = values[2];
        result.projected_accounts.push_back(std::move(proj));
    }

    std::map<std::string, const IndustryAccount *> accounts;
    std::map<std::string, double> output;
    for (const auto &acc : result.projected_accounts) {
        accounts[acc.wiod_code] = &acc;
        output[acc.wiod_code] = acc.output_bb;
    }

    std::vector<WiodExposure> usable;
    for (const auto &e : exposure) {
        if (excluded.count(e.wiod_code))
            continue;
        if (!accounts.count(e.wiod_code))
            throw ValidationError("no historical accounts for industry " + e.wiod_code);
        usable.push_back(e);
    }

    auto shocks = productivity_shock(usable, output, cs);
    for (std::size_t i = 0; i < shocks.size(); ++i) {
        const auto &acc = *accounts.at(shocks[i].wiod_code);
        auto intens = intensities(acc, &result.diagnostics);
        result.rows.push_back(industry_impact(shocks[i], acc, intens));
    }
    result.totals = aggregate(result.rows);
    return result;
}

} // namespace aiimpact
