// Sweep runner and reporting front end for the two-way SWIPT relay AAoI
// toolkit. Verbs: point, sweep, plotdata, validate.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swiptaoi/analytic.hpp"
#include "swiptaoi/config.hpp"
#include "swiptaoi/mcsim.hpp"
#include "swiptaoi/sweep.hpp"

namespace {

using namespace swiptaoi;

struct CommonOpts {
    std::string config_path;
    std::map<std::string, double> overrides;
    std::map<std::string, double> staged; // CLI11 writes here; only seen flags count
};

void add_config_options(CLI::App* app, CommonOpts& opts) {
    app->add_option("--config", opts.config_path, "Scenario config file (key = value)");
    for (const auto& key : config_keys()) {
        std::string flag = "--" + key;
        for (auto& ch : flag) {
            if (ch == '_') ch = '-';
        }
        opts.staged[key] = 0.0;
        app->add_option(flag, opts.staged[key], "Override config key " + key);
    }
}

SystemConfig resolve_config(const CLI::App* app, const CommonOpts& opts) {
    SystemConfig cfg;
    if (!opts.config_path.empty()) cfg = load_config(opts.config_path);
    std::map<std::string, double> overrides;
    for (const auto& [key, value] : opts.staged) {
        std::string flag = "--" + key;
        for (auto& ch : flag) {
            if (ch == '_') ch = '-';
        }
        if (app->count(flag) > 0) overrides[key] = value;
    }
    apply_overrides(cfg, overrides);
    validate_config(cfg);
    return cfg;
}

void print_config_header(std::ostream& out, const SystemConfig& cfg) {
    out << "# resolved configuration\n";
    std::istringstream lines(config_to_string(cfg));
    std::string line;
    while (std::getline(lines, line)) out << "#   " << line << "\n";
}

void parse_methods(const std::string& methods, bool& analytic, bool& mc) {
    analytic = mc = false;
    std::istringstream in(methods);
    std::string m;
    while (std::getline(in, m, ',')) {
        if (m == "analytic") analytic = true;
        else if (m == "mc") mc = true;
        else throw CLI::ValidationError("--methods", "unknown method '" + m + "'");
    }
    if (!analytic && !mc) throw CLI::ValidationError("--methods", "no methods selected");
}

void print_report(std::ostream& out, const AoiReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "method=%s\n"
                  "  eps_relay_a=%.9g eps_relay_b=%.9g\n"
                  "  eps_dest_a=%.9g eps_dest_b=%.9g\n"
                  "  phi_a=%.9g phi_b=%.9g\n"
                  "  aaoi_a=%.9g s aaoi_b=%.9g s\n"
                  "  weighted_sum=%.9g s ci_radius=%.9g s\n",
                  method_name(r.method), r.eps_relay_a, r.eps_relay_b,
                  r.eps_dest_a, r.eps_dest_b, r.phi_a, r.phi_b,
                  r.aaoi_a, r.aaoi_b, r.weighted_sum, r.ci_radius);
    out << buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average Age of Information for a two-way SWIPT DF relay "
                 "under finite-blocklength coding"};
    app.require_subcommand(1);

    // point
    auto* point = app.add_subcommand("point", "Evaluate one scenario");
    CommonOpts point_opts;
    add_config_options(point, point_opts);
    std::string point_methods = "analytic";
    std::uint64_t point_cycles = 1000000;
    std::uint64_t point_seed = 1;
    int point_workers = 1;
    point->add_option("--methods", point_methods, "analytic,mc");
    point->add_option("--cycles", point_cycles, "Monte Carlo cycles");
    point->add_option("--seed", point_seed, "Master RNG seed");
    point->add_option("--workers", point_workers, "Worker threads");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter axis");
    CommonOpts sweep_opts;
    add_config_options(sweep, sweep_opts);
    std::string sweep_axis = "power";
    std::string sweep_grid;
    std::string sweep_methods = "analytic";
    SweepSpec spec;
    std::string sweep_out;
    sweep->add_option("--axis", sweep_axis,
                      "power|blocklength|update_bits|p_min|rho|distance");
    sweep->add_option("--grid", sweep_grid, "start:stop:steps[:log]")->required();
    sweep->add_option("--methods", sweep_methods, "analytic,mc");
    sweep->add_option("--cycles", spec.mc_cycles, "Monte Carlo cycles per point");
    sweep->add_option("--seed", spec.seed, "Master RNG seed");
    sweep->add_option("--workers", spec.workers, "Worker threads");
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    // plotdata
    auto* plot = app.add_subcommand("plotdata", "Split sweep CSVs into x/y .dat files");
    std::vector<std::string> plot_csvs;
    std::string plot_out = ".";
    std::string plot_figure = "fig";
    plot->add_option("csv", plot_csvs, "Sweep CSV file(s)")->required();
    plot->add_option("--out", plot_out, "Output directory");
    plot->add_option("--figure", plot_figure, "Figure name prefix");

    // validate
    auto* validate = app.add_subcommand("validate",
                                        "Analytic-vs-Monte-Carlo comparison suite");
    CommonOpts val_opts;
    add_config_options(validate, val_opts);
    std::uint64_t val_cycles = 1000000;
    std::uint64_t val_seed = 1;
    int val_workers = 1;
    std::string val_out = "validate-out";
    validate->add_option("--cycles", val_cycles, "Monte Carlo cycles");
    validate->add_option("--seed", val_seed, "Master RNG seed");
    validate->add_option("--workers", val_workers, "Worker threads");
    validate->add_option("--out", val_out, "Output directory for CSVs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (point->parsed()) {
            const SystemConfig cfg = resolve_config(point, point_opts);
            bool run_analytic = false, run_mc = false;
            parse_methods(point_methods, run_analytic, run_mc);
            print_config_header(std::cout, cfg);
            AoiReport analytic_report;
            if (run_analytic) {
                analytic_report = evaluate_analytic(cfg, {cfg.gcq_v, cfg.gcq_m});
                print_report(std::cout, analytic_report);
            }
            if (run_mc) {
                const McPointReport mc = run_point_mc(cfg, point_cycles, point_seed,
                                                      DecodeModel::exact_q, point_workers);
                print_report(std::cout, mc.report);
                if (run_analytic) {
                    char buf[128];
                    std::snprintf(buf, sizeof(buf), "analytic-mc gap: %.9g s\n",
                                  mc.report.weighted_sum - analytic_report.weighted_sum);
                    std::cout << buf;
                }
            }
            return 0;
        }
        if (sweep->parsed()) {
            const SystemConfig cfg = resolve_config(sweep, sweep_opts);
            spec.axis = parse_axis(sweep_axis);
            spec.grid = parse_grid(sweep_grid);
            parse_methods(sweep_methods, spec.run_analytic, spec.run_mc);
            const auto rows = run_sweep(cfg, spec);
            std::ofstream out(sweep_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write CSV: " + sweep_out);
            write_sweep_csv(out, rows, spec);
            std::cout << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
            return 0;
        }
        if (plot->parsed()) {
            for (const auto& csv : plot_csvs) {
                for (const auto& name : emit_plotdata(csv, plot_out, plot_figure)) {
                    std::cout << "wrote " << plot_out << "/" << name << "\n";
                }
            }
            return 0;
        }
        if (validate->parsed()) {
            const SystemConfig cfg = resolve_config(validate, val_opts);
            print_config_header(std::cout, cfg);
            const bool ok = run_validate(cfg, val_cycles, val_seed, val_workers,
                                         val_out, std::cout);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
