#include "aiimpact/errors.hpp"
#include "aiimpact/pipeline.hpp"
#include "aiimpact/projection.hpp"
#include "aiimpact/report.hpp"
#include "aiimpact/sensitivity.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace aiimpact;

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::string variant = "all";
    std::vector<std::string> overrides; // key=value
};

void add_common(CLI::App *cmd, CommonArgs &args) {
    cmd->add_option("--config", args.config_path, "run-config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory (overrides config)");
    cmd->add_option("--variant", args.variant, "exposure variant to export")
        ->check(CLI::IsMember({"lower", "central", "upper", "all"}));
    cmd->add_option("--set", args.overrides, "config override, key=value");
}

RunConfig make_config(const CommonArgs &args) {
    RunConfig config = load_run_config(args.config_path);
    for (const auto &kv : args.overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--set expects key=value, got '" + kv + "'");
        apply_override(config, kv.substr(0, eq), kv.substr(eq + 1),
                       std::filesystem::path(args.config_path).parent_path());
    }
    if (!args.out_dir.empty())
        config.out_dir = args.out_dir;
    return config;
}

ExportOptions make_export_options(const CommonArgs &args, const RunConfig &config) {
    ExportOptions opts;
    opts.out_dir = config.out_dir;
    opts.provenance = provenance_line(config, args.config_path);
    if (args.variant == "lower")
        opts.only = Variant::lower;
    else if (args.variant == "central")
        opts.only = Variant::central;
    else if (args.variant == "upper")
        opts.only = Variant::upper;
    return opts;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"industry-level AI adoption impact estimator"};
    app.require_subcommand(1);

    CommonArgs run_args, sens_args, proj_args, report_args;
    int tf_steps = 21, ls_steps = 21;
    std::string window_text, target_text;
    std::string table = "all", format = "text", order = "impact";

    auto *cmd_run = app.add_subcommand("run", "run the full estimation pipeline");
    add_common(cmd_run, run_args);

    auto *cmd_sens = app.add_subcommand("sensitivity", "sweep the cost-savings parameters");
    add_common(cmd_sens, sens_args);
    cmd_sens->add_option("--task-fraction-steps", tf_steps, "grid points on [0,1]");
    cmd_sens->add_option("--labor-savings-steps", ls_steps, "grid points on [0,1]");

    auto *cmd_proj = app.add_subcommand("project", "re-estimate on trend-projected accounts");
    add_common(cmd_proj, proj_args);
    cmd_proj->add_option("--window", window_text, "fit window, FIRST:LAST");
    cmd_proj->add_option("--target", target_text, "projection target year");

    auto *cmd_report = app.add_subcommand("report", "render result tables");
    add_common(cmd_report, report_args);
    cmd_report->add_option("--table", table, "table to render")
        ->check(CLI::IsMember({"selected", "full", "aggregate", "all"}));
    cmd_report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_report->add_option("--order", order, "full-table row order")
        ->check(CLI::IsMember({"impact", "code"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            auto config = make_config(run_args);
            auto bundle = run(config);
            write_bundle(bundle, make_export_options(run_args, config));
            std::cout << render_table(bundle, TableKind::aggregate_summary);
            for (const auto &d : bundle.diagnostics)
                std::cerr << "note: " << d << "\n";
        } else if (cmd_sens->parsed()) {
            auto config = make_config(sens_args);
            auto bundle = run(config);
            auto grid = sweep(bundle.totals, bundle.cost_savings, even_axis(tf_steps),
                              even_axis(ls_steps));
            write_sensitivity(grid, make_export_options(sens_args, config));
            std::cout << "wrote " << grid.cells.size() << " sensitivity cells\n";
        } else if (cmd_proj->parsed()) {
            auto config = make_config(proj_args);
            if (!window_text.empty())
                config.projection_window = parse_year_range(window_text);
            if (!target_text.empty())
                config.projection_target_year = std::stoi(target_text);
            config.validate(/*need_history=*/true);
            auto bundle = run(config);
            auto history = load_accounts(config.accounts_history);
            auto proj = projected_impact(history, bundle.wiod_exposure, bundle.cost_savings,
                                         config.projection_window,
                                         config.projection_target_year);
            write_projection(proj, make_export_options(proj_args, config));
            std::cout << "projected aggregate: "
                      << proj.totals.delta_energy_pj.central << " PJ, "
                      << proj.totals.delta_emissions_kt.central << " ktCO2\n";
            for (const auto &d : proj.diagnostics)
                std::cerr << "note: " << d << "\n";
        } else if (cmd_report->parsed()) {
            auto config = make_config(report_args);
            auto bundle = run(config);
            auto table_order = order == "code" ? TableOrder::by_code : TableOrder::by_impact;
            if (format == "text") {
                if (table == "selected" || table == "all")
                    std::cout << render_table(bundle, TableKind::selected_industries) << "\n";
                if (table == "full" || table == "all")
                    std::cout << render_table(bundle, TableKind::full_industry, table_order)
                              << "\n";
                if (table == "aggregate" || table == "all")
                    std::cout << render_table(bundle, TableKind::aggregate_summary);
            } else {
                // machine formats reuse the bundle exports
                write_bundle(bundle, make_export_options(report_args, config));
                std::cout << "wrote " << (format == "json" ? "aggregate.json" : "CSV exports")
                          << " to " << config.out_dir.string() << "\n";
            }
        }
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ComputationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
