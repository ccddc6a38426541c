#include "aiimpact/concordance.hpp"

#include "aiimpact/csv.hpp"
#include "aiimpact/errors.hpp"

#include <set>

namespace aiimpact {

const std::string &IndustryMap::wiod_for_naics(const std::string &naics4) const {
    auto n = naics_to_isic.find(naics4);
    if (n == naics_to_isic.end())
        throw ValidationError("NAICS code " + naics4 + " absent from crosswalk map");
    auto w = isic_to_wiod.find(n->second);
    if (w == isic_to_wiod.end())
        throw ValidationError("ISIC code " + n->second + " absent from grouping table");
    return w->second;
}

std::vector<std::string> IndustryMap::wiod_codes() const {
    std::set<std::string> codes;
    for (const auto &[isic, wiod] : isic_to_wiod)
        codes.insert(wiod);
    return {codes.begin(), codes.end()};
}

std::map<std::string, std::string> resolve_crosswalk(std::span<const CrosswalkEntry> entries,
                                                     std::vector<std::string> *diagnostics) {
    if (entries.empty())
        throw ValidationError("resolve_crosswalk: empty crosswalk");
    // naics4 -> isic2 -> total count
    std::map<std::string, std::map<std::string, long>> counts;
    for (const auto &e : entries)
        counts[e.naics4][e.isic2] += e.occurrence_count;

    std::map<std::string, std::string> out;
    for (const auto &[naics, by_isic] : counts) {
        std::string best;
        long best_count = -1;
        bool tied = false;
        for (const auto &[isic, count] : by_isic) { // map order = lexicographic
            if (count > best_count) {
                best = isic;
                best_count = count;
                tied = false;
            } else if (count == best_count) {
                tied = true;
            }
        }
        if (best_count <= 0)
            throw ValidationError("crosswalk has no positive occurrence count for NAICS " +
                                  naics);
        if (tied && diagnostics)
            diagnostics->push_back("crosswalk tie for NAICS " + naics +
                                   "; resolved to smallest ISIC code " + best);
        out[naics] = best;
    }
    return out;
}

std::map<std::string, std::string> load_grouping(const std::filesystem::path &path) {
    auto t = csv::read_file(path);
    auto c_isic = t.column("isic2");
    auto c_wiod = t.column("wiod_code");
    std::map<std::string, std::string> out;
    for (std::size_t r = 1; r <= t.rows.size(); ++r) {
        const auto &isic = t.rows[r - 1][c_isic];
        const auto &wiod = t.rows[r - 1][c_wiod];
        if (wiod == "U")
            throw ValidationError(t.source + ": row " + std::to_string(r) +
                                  ": WIOD code U is excluded from the industry set");
        auto [it, inserted] = out.emplace(isic, wiod);
        if (!inserted && it->second != wiod)
            throw ValidationError(t.source + ": ISIC code " + isic +
                                  " maps to multiple WIOD codes");
    }
    return out;
}

std::vector<IndustryExposure> aggregate_to_wiod(std::span<const IndustryExposure> naics,
                                                const IndustryMap &map) {
    std::map<std::string, IndustryExposure> by_wiod;
    for (const auto &code : map.wiod_codes())
        by_wiod.emplace(code, IndustryExposure{code, 0.0, 0.0, 0.0});
    for (const auto &ind : naics) {
        auto &agg = by_wiod.at(map.wiod_for_naics(ind.code));
        agg.exposed_wage_bill_bb += ind.exposed_wage_bill_bb;
        agg.total_wage_bill_bb += ind.total_wage_bill_bb;
    }
    std::vector<IndustryExposure> out;
    out.reserve(by_wiod.size());
    for (auto &[code, agg] : by_wiod) {
        agg.exposure_rate =
            agg.total_wage_bill_bb > 0 ? agg.exposed_wage_bill_bb / agg.total_wage_bill_bb : 0.0;
        out.push_back(agg);
    }
    return out;
}

} // namespace aiimpact
