#pragma once

#include "aiimpact/impact.hpp"
#include "aiimpact/ingest.hpp"
#include "aiimpact/shock.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace aiimpact {

enum class AccountVariable { output, energy, emissions };

const char *account_variable_name(AccountVariable v);

// Least-squares line through (year, ln value). Years are centered at the
// window midpoint, so project() uses (year - center_year).
struct TrendFit {
    std::string wiod_code;
    AccountVariable variable = AccountVariable::output;
    double intercept = 0; // ln value at center_year
    double slope = 0;     // per year
    double center_year = 0;
    double r_squared = 0;
    int points_used = 0;
};

// OLS of ln(value) on year over the window; zero or negative observations are
// excluded. Fewer than 2 positive points is an unfittable-series error.
TrendFit fit_loglinear(const std::map<int, double> &series, YearRange window,
                       const std::string &wiod_code = "",
                       AccountVariable variable = AccountVariable::output);

// exp(intercept + slope * (year - center_year))
double project(const TrendFit &fit, int target_year);

struct ProjectedImpact {
    std::vector<IndustryAccount> projected_accounts; // one row per industry at target year
    std::vector<TrendFit> fits;
    std::vector<ImpactRow> rows;
    AggregateImpact totals;
    std::vector<std::string> diagnostics; // unfittable series, excluded industries
};

// Fits all three variables per industry on the historical accounts, projects
// to the target year, recomputes intensities, and re-runs the impact chain.
// The shock numerator phi * exposed_wage_bill is unchanged by projection, so
// delta output is invariant and only the intensity legs move.
ProjectedImpact projected_impact(std::span<const IndustryAccount> history,
                                 std::span<const WiodExposure> exposure, const CostSavings &cs,
                                 YearRange window, int target_year);

} // namespace aiimpact
