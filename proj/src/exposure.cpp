#include "aiimpact/exposure.hpp"

#include "aiimpact/errors.hpp"

#include <map>

namespace aiimpact {

const char *variant_name(Variant v) {
    switch (v) {
    case Variant::lower:
        return "lower";
    case Variant::central:
        return "central";
    case Variant::upper:
        return "upper";
    }
    return "?";
}

int binarize(double score, Variant variant) {
    if (!is_admissible_score(score))
        throw ValidationError("inadmissible automation score " + std::to_string(score));
    switch (variant) {
    case Variant::lower:
        return score == 1.0 ? 1 : 0;
    case Variant::central:
        return score > 0.5 ? 1 : 0;
    case Variant::upper:
        return score > 0.0 ? 1 : 0;
    }
    return 0;
}

double occupation_exposure(std::span<const TaskExposureRecord> tasks, Variant variant) {
    if (tasks.empty())
        throw ValidationError("occupation_exposure: empty task list");
    const std::string &soc = tasks.front().soc8;
    int exposed = 0;
    for (const auto &t : tasks) {
        if (t.soc8 != soc)
            throw ValidationError("occupation_exposure: tasks span multiple occupations (" +
                                  soc + " vs " + t.soc8 + ")");
        exposed += binarize(t.automation_score, variant);
    }
    return static_cast<double>(exposed) / static_cast<double>(tasks.size());
}

std::vector<OccupationExposure> occupation_exposure_table(
    std::span<const TaskExposureRecord> tasks, Variant variant) {
    std::map<std::string, std::pair<int, int>> by_soc; // soc8 -> (exposed, total)
    for (const auto &t : tasks) {
        auto &acc = by_soc[t.soc8];
        acc.first += binarize(t.automation_score, variant);
        acc.second += 1;
    }
    std::vector<OccupationExposure> out;
    out.reserve(by_soc.size());
    for (const auto &[soc, acc] : by_soc)
        out.push_back({soc, static_cast<double>(acc.first) / acc.second});
    return out;
}

std::vector<OccupationExposure> rollup_soc(std::span<const OccupationExposure> occ,
                                           int target_digits) {
    if (target_digits != 6 && target_digits != 5)
        throw ValidationError("rollup_soc: target granularity must be 6 or 5 digits");
    std::map<std::string, std::pair<double, int>> groups;
    for (const auto &o : occ) {
        if (static_cast<int>(o.soc_code.size()) < target_digits)
            throw ValidationError("rollup_soc: code '" + o.soc_code +
                                  "' shorter than target granularity");
        auto &acc = groups[o.soc_code.substr(0, static_cast<std::size_t>(target_digits))];
        acc.first += o.exposure;
        acc.second += 1;
    }
    std::vector<OccupationExposure> out;
    out.reserve(groups.size());
    for (const auto &[code, acc] : groups)
        out.push_back({code, acc.first / acc.second});
    return out;
}

std::vector<IndustryExposure> industry_exposure(std::span<const OccupationExposure> occ6,
                                                std::span<const OccupationExposure> occ5,
                                                std::span<const AveragedWageBill> wages,
                                                std::vector<std::string> *warnings) {
    if (wages.empty())
        throw ValidationError("industry_exposure: empty wage table");
    std::map<std::string, double> six, five;
    for (const auto &o : occ6)
        six[o.soc_code] = o.exposure;
    for (const auto &o : occ5)
        five[o.soc_code] = o.exposure;

    auto resolve = [&](const std::string &soc) -> double {
        if (auto it = six.find(soc); it != six.end())
            return it->second;
        // wage rows at 6 digits may still only match the coarser table
        if (soc.size() >= 5)
            if (auto it = five.find(soc.substr(0, 5)); it != five.end())
                return it->second;
        return 0.0; // unmatched occupations are treated as not exposed
    };

    std::map<std::string, IndustryExposure> by_industry;
    for (const auto &w : wages) {
        auto &ind = by_industry
                        .try_emplace(w.naics4, IndustryExposure{w.naics4, 0.0, 0.0, 0.0})
                        .first->second;
        ind.exposed_wage_bill_bb += resolve(w.soc_code) * w.wage_bill_bb;
        ind.total_wage_bill_bb += w.wage_bill_bb;
    }
    std::vector<IndustryExposure> out;
    out.reserve(by_industry.size());
    for (auto &[code, ind] : by_industry) {
        if (ind.total_wage_bill_bb > 0) {
            ind.exposure_rate = ind.exposed_wage_bill_bb / ind.total_wage_bill_bb;
        } else {
            ind.exposure_rate = 0.0;
            if (warnings)
                warnings->push_back("industry " + code +
                                    " has zero total wage bill; exposure rate set to 0");
        }
        out.push_back(ind);
    }
    return out;
}

} // namespace aiimpact
