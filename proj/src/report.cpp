#include "aiimpact/report.hpp"

#include "aiimpact/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aiimpact {

namespace {

constexpr const char *kVersion = "0.1.0";

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// full precision round-trippable decimal for machine-readable exports
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path &dir, const char *name,
                       const std::string &provenance) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write output file: " + (dir / name).string());
    if (!provenance.empty())
        out << provenance << "\n";
    return out;
}

bool emit(const ExportOptions &opts, Variant v) {
    return !opts.only || *opts.only == v;
}

} // namespace

std::string file_digest(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open file for hashing: " + path.string());
    std::uint64_t h = 1469598103934665603ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

std::string provenance_line(const RunConfig &config,
                            const std::filesystem::path &config_path) {
    std::ostringstream line;
    line << "# aiimpact " << kVersion;
    if (!config_path.empty())
        line << " config=" << file_digest(config_path);
    line << " inputs=";
    const std::filesystem::path *inputs[] = {&config.tasks,     &config.wagebills,
                                             &config.deflator,  &config.accounts,
                                             &config.crosswalk, &config.grouping};
    bool first = true;
    for (const auto *p : inputs) {
        if (!first)
            line << ",";
        line << file_digest(*p);
        first = false;
    }
    return line.str();
}

void write_bundle(const ResultBundle &bundle, const ExportOptions &opts) {
    {
        auto out = open_out(opts.out_dir, "industry_impacts.csv", opts.provenance);
        out << "wiod_code,variant,delta_output_bb,delta_energy_pj,delta_emissions_ktco2\n";
        for (const auto &row : bundle.rows)
            for (Variant v : kAllVariants) {
                if (!emit(opts, v))
                    continue;
                out << row.wiod_code << ',' << variant_name(v) << ','
                    << num(row.delta_output_bb.get(v)) << ',' << num(row.delta_energy_pj.get(v))
                    << ',' << num(row.delta_emissions_kt.get(v)) << '\n';
            }
    }
    {
        auto out = open_out(opts.out_dir, "aggregate.csv", opts.provenance);
        out << "variant,delta_output_bb,delta_energy_pj,delta_emissions_ktco2\n";
        for (Variant v : kAllVariants) {
            if (!emit(opts, v))
                continue;
            out << variant_name(v) << ',' << num(bundle.totals.delta_output_bb.get(v)) << ','
                << num(bundle.totals.delta_energy_pj.get(v)) << ','
                << num(bundle.totals.delta_emissions_kt.get(v)) << '\n';
        }
    }
    {
        nlohmann::ordered_json j;
        for (Variant v : kAllVariants) {
            j["aggregate"][variant_name(v)] = {
                {"delta_output_bb", bundle.totals.delta_output_bb.get(v)},
                {"delta_energy_pj", bundle.totals.delta_energy_pj.get(v)},
                {"delta_emissions_ktco2", bundle.totals.delta_emissions_kt.get(v)},
            };
            j["log_output_change"][variant_name(v)] = bundle.log_output_change.get(v);
        }
        j["context"] = {
            {"delta_energy_twh", bundle.context.delta_energy_twh},
            {"average_capacity_gw", bundle.context.average_capacity_gw},
            {"capacity_share", bundle.context.capacity_share},
            {"emissions_share", bundle.context.emissions_share},
        };
        for (const auto &r : bundle.context.comparator_ratios)
            j["context"]["comparator_ratios"][r.name] = r.ratio;
        auto out = open_out(opts.out_dir, "aggregate.json", "");
        out << j.dump(2) << '\n';
    }
    {
        auto out = open_out(opts.out_dir, "exposure_naics.csv", opts.provenance);
        out << "naics4,variant,exposed_wage_bill_bb,total_wage_bill_bb,exposure_rate\n";
        for (Variant v : kAllVariants)
            for (const auto &e : bundle.naics_exposure[static_cast<std::size_t>(v)]) {
                if (!emit(opts, v))
                    break;
                out << e.code << ',' << variant_name(v) << ',' << num(e.exposed_wage_bill_bb)
                    << ',' << num(e.total_wage_bill_bb) << ',' << num(e.exposure_rate) << '\n';
            }
    }
    {
        auto out = open_out(opts.out_dir, "exposure_wiod.csv", opts.provenance);
        out << "wiod_code,variant,exposed_wage_bill_bb,total_wage_bill_bb,exposure_rate\n";
        for (const auto &e : bundle.wiod_exposure)
            for (Variant v : kAllVariants) {
                const double exposed = e.exposed_wage_bill_bb.get(v);
                const double rate =
                    e.total_wage_bill_bb > 0 ? exposed / e.total_wage_bill_bb : 0.0;
                out << e.wiod_code << ',' << variant_name(v) << ',' << num(exposed) << ','
                    << num(e.total_wage_bill_bb) << ',' << num(rate) << '\n';
            }
    }
    {
        auto out = open_out(opts.out_dir, "naics_wiod_map.csv", opts.provenance);
        out << "naics4,isic2,wiod_code\n";
        for (const auto &[naics, isic] : bundle.industry_map.naics_to_isic)
            out << naics << ',' << isic << ',' << bundle.industry_map.isic_to_wiod.at(isic)
                << '\n';
    }
    if (!bundle.diagnostics.empty()) {
        auto out = open_out(opts.out_dir, "diagnostics.txt", "");
        for (const auto &d : bundle.diagnostics)
            out << d << '\n';
    }
}

void write_sensitivity(const SensitivityGrid &grid, const ExportOptions &opts) {
    auto out = open_out(opts.out_dir, "sensitivity.csv", opts.provenance);
    out << "task_fraction,labor_savings,variant,delta_energy_pj,delta_emissions_ktco2\n";
    for (const auto &cell : grid.cells)
        out << num(cell.task_fraction) << ',' << num(cell.labor_savings) << ','
            << variant_name(cell.variant) << ',' << num(cell.delta_energy_pj) << ','
            << num(cell.delta_emissions_kt) << '\n';
}

void write_projection(const ProjectedImpact &proj, const ExportOptions &opts) {
    {
        auto out = open_out(opts.out_dir, "projected_accounts.csv", opts.provenance);
        out << "wiod_code,year,output_bb_usd2017,energy_pj,emissions_ktco2\n";
        for (const auto &acc : proj.projected_accounts)
            out << acc.wiod_code << ',' << acc.year << ',' << num(acc.output_bb) << ','
                << num(acc.energy_pj) << ',' << num(acc.emissions_kt) << '\n';
    }
    {
        auto out = open_out(opts.out_dir, "fit_diagnostics.csv", opts.provenance);
        out << "wiod_code,variable,slope,intercept,center_year,r_squared,points_used\n";
        for (const auto &fit : proj.fits)
            out << fit.wiod_code << ',' << account_variable_name(fit.variable) << ','
                << num(fit.slope) << ',' << num(fit.intercept) << ',' << num(fit.center_year)
                << ',' << num(fit.r_squared) << ',' << fit.points_used << '\n';
    }
    {
        auto out = open_out(opts.out_dir, "projected_impacts.csv", opts.provenance);
        out << "wiod_code,variant,delta_output_bb,delta_energy_pj,delta_emissions_ktco2\n";
        for (const auto &row : proj.rows)
            for (Variant v : kAllVariants)
                out << row.wiod_code << ',' << variant_name(v) << ','
                    << num(row.delta_output_bb.get(v)) << ',' << num(row.delta_energy_pj.get(v))
                    << ',' << num(row.delta_emissions_kt.get(v)) << '\n';
    }
    {
        nlohmann::ordered_json j;
        for (Variant v : kAllVariants)
            j["aggregate"][variant_name(v)] = {
                {"delta_energy_pj", proj.totals.delta_energy_pj.get(v)},
                {"delta_emissions_ktco2", proj.totals.delta_emissions_kt.get(v)},
            };
        j["diagnostics"] = proj.diagnostics;
        auto out = open_out(opts.out_dir, "projected_aggregate.json", "");
        out << j.dump(2) << '\n';
    }
}

std::string render_table(const ResultBundle &bundle, TableKind kind, TableOrder order) {
    std::ostringstream out;
    if (kind == TableKind::aggregate_summary) {
        out << "Aggregate impact\n";
        out << "variant   delta_output ($BB)  delta_energy (PJ)  delta_emissions (ktCO2)\n";
        for (Variant v : kAllVariants) {
            char line[160];
            std::snprintf(line, sizeof line, "%-8s  %18s  %17s  %23s\n", variant_name(v),
                          fixed(bundle.totals.delta_output_bb.get(v), 3).c_str(),
                          fixed(bundle.totals.delta_energy_pj.get(v), 3).c_str(),
                          fixed(bundle.totals.delta_emissions_kt.get(v), 3).c_str());
            out << line;
        }
        out << "central energy: " << fixed(bundle.context.delta_energy_twh, 2) << " TWh, "
            << fixed(bundle.context.average_capacity_gw, 2) << " GW average ("
            << fixed(bundle.context.capacity_share * 100, 3) << "% of national capacity); "
            << "emissions " << fixed(bundle.context.emissions_share * 100, 4)
            << "% of national total\n";
        for (const auto &r : bundle.context.comparator_ratios)
            out << "  vs " << r.name << ": " << fixed(r.ratio, 2) << "x\n";
        return out.str();
    }

    if (kind == TableKind::selected_industries) {
        // the three contrast industries when present, else the top 3 by
        // central emissions change
        std::vector<std::string> picks;
        for (const char *c : {"P85", "J58", "G45"})
            for (const auto &row : bundle.rows)
                if (row.wiod_code == c)
                    picks.push_back(c);
        if (picks.empty()) {
            auto sorted = bundle.rows;
            std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
                return a.delta_emissions_kt.central > b.delta_emissions_kt.central;
            });
            for (std::size_t i = 0; i < sorted.size() && i < 3; ++i)
                picks.push_back(sorted[i].wiod_code);
        }
        out << "code     output  shock_pct  energy_int  emis_int     dy ($BB)     dE (PJ)  "
               "dC (ktCO2)\n";
        for (const auto &code : picks) {
            const ImpactRow *row = nullptr;
            const ProductivityShock *shock = nullptr;
            const Intensities *intens = nullptr;
            const IndustryAccount *acc = nullptr;
            for (const auto &r : bundle.rows)
                if (r.wiod_code == code)
                    row = &r;
            for (const auto &s : bundle.shocks)
                if (s.wiod_code == code)
                    shock = &s;
            for (const auto &i : bundle.intensity_table)
                if (i.wiod_code == code)
                    intens = &i;
            for (const auto &a : bundle.reference_accounts)
                if (a.wiod_code == code)
                    acc = &a;
            char line[256];
            std::snprintf(line, sizeof line,
                          "%-7s %7s  %9s  %10s  %8s  %11s  %10s  %10s\n", code.c_str(),
                          fixed(acc->output_bb, 0).c_str(),
                          fixed(shock->value.central * 100, 3).c_str(),
                          fixed(intens->energy_per_output, 3).c_str(),
                          fixed(intens->emissions_per_energy, 2).c_str(),
                          fixed(row->delta_output_bb.central, 3).c_str(),
                          fixed(row->delta_energy_pj.central, 3).c_str(),
                          fixed(row->delta_emissions_kt.central, 3).c_str());
            out << line;
        }
        return out.str();
    }

    if (kind == TableKind::full_industry) {
        auto rows = bundle.rows;
        if (order == TableOrder::by_impact)
            std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
                if (a.delta_emissions_kt.central != b.delta_emissions_kt.central)
                    return a.delta_emissions_kt.central > b.delta_emissions_kt.central;
                return a.wiod_code < b.wiod_code;
            });
        out << "code     dGDP ($BB) [lower, upper]            dEnergy (PJ) [lower, upper]       "
               "  dEmissions (ktCO2) [lower, upper]\n";
        for (const auto &row : rows) {
            auto cell = [](const VariantTriple &t) {
                return fixed(t.central, 5) + " [" + fixed(t.lower, 5) + ", " +
                       fixed(t.upper, 5) + "]";
            };
            char line[320];
            std::snprintf(line, sizeof line, "%-8s %-38s %-38s %s\n", row.wiod_code.c_str(),
                          cell(row.delta_output_bb).c_str(), cell(row.delta_energy_pj).c_str(),
                          cell(row.delta_emissions_kt).c_str());
            out << line;
        }
        return out.str();
    }
    throw ValidationError("unknown table kind");
}

} // namespace aiimpact
