#include "swiptaoi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swiptaoi/fbl.hpp"

namespace swiptaoi {

namespace {

std::string fmt9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

GcqSettings gcq_of(const SystemConfig& cfg) {
    return {cfg.gcq_v, cfg.gcq_m};
}

} // namespace

SweepAxis parse_axis(const std::string& name) {
    if (name == "power") return SweepAxis::power;
    if (name == "blocklength") return SweepAxis::blocklength;
    if (name == "update_bits") return SweepAxis::update_bits;
    if (name == "p_min") return SweepAxis::p_min;
    if (name == "rho") return SweepAxis::rho;
    if (name == "distance") return SweepAxis::distance;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::power: return "power";
        case SweepAxis::blocklength: return "blocklength";
        case SweepAxis::update_bits: return "update_bits";
        case SweepAxis::p_min: return "p_min";
        case SweepAxis::rho: return "rho";
        case SweepAxis::distance: return "distance";
    }
    return "?";
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ':')) parts.push_back(item);
    bool log_scale = false;
    if (parts.size() == 4 && parts[3] == "log") {
        log_scale = true;
        parts.pop_back();
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid must be start:stop:steps[:log], got '" + text + "'");
    }
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const long steps = std::stol(parts[2]);
    if (steps < 1) throw std::invalid_argument("grid steps must be >= 1");
    if (steps == 1) return {start};
    if (!(stop > start)) throw std::invalid_argument("grid requires stop > start");
    if (log_scale && start <= 0.0) throw std::invalid_argument("log grid requires start > 0");
    std::vector<double> grid(steps);
    for (long i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / (steps - 1);
        grid[i] = log_scale ? start * std::pow(stop / start, f)
                            : start + f * (stop - start);
    }
    return grid;
}

SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value) {
    SystemConfig cfg = base;
    auto as_int = [&](const char* what) {
        if (value < 1.0 || value != std::floor(value)) {
            throw std::invalid_argument(std::string(what) + " grid values must be positive integers");
        }
        return static_cast<int>(value);
    };
    switch (axis) {
        case SweepAxis::power:
            cfg.p_a = cfg.p_b = value;
            break;
        case SweepAxis::blocklength:
            // Single-axis sweep sets all four links; T follows automatically.
            cfg.n_ar = cfg.n_br = cfg.n_ra = cfg.n_rb = as_int("blocklength");
            break;
        case SweepAxis::update_bits:
            cfg.k_ar = cfg.k_br = cfg.k_ra = cfg.k_rb = as_int("update_bits");
            break;
        case SweepAxis::p_min:
            cfg.p_min = value;
            break;
        case SweepAxis::rho:
            cfg.rho = value;
            break;
        case SweepAxis::distance:
            cfg.d_ar = cfg.d_br = value;
            break;
    }
    validate_config(cfg);
    return cfg;
}

std::vector<SweepRow> run_sweep(const SystemConfig& base, const SweepSpec& spec) {
    if (spec.grid.empty()) throw std::invalid_argument("sweep grid must be nonempty");
    if (!std::is_sorted(spec.grid.begin(), spec.grid.end(),
                        [](double a, double b) { return a <= b; })) {
        throw std::invalid_argument("sweep grid must be strictly increasing");
    }
    if (!spec.run_analytic && !spec.run_mc) {
        throw std::invalid_argument("sweep needs at least one method");
    }

    const std::size_t n = spec.grid.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::string> errors(n);

    auto eval_point = [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.axis_value = spec.grid[i];
        try {
            const SystemConfig cfg = apply_axis(base, spec.axis, spec.grid[i]);
            if (spec.run_analytic) {
                row.analytic = evaluate_analytic(cfg, gcq_of(cfg));
            }
            if (spec.run_mc) {
                const std::uint64_t point_seed = spec.seed + 1000003ULL * i;
                const McPointReport mc = run_point_mc(cfg, spec.mc_cycles, point_seed,
                                                      DecodeModel::exact_q, 1);
                row.mc = mc.report;
                row.mc_trace = mc.trace;
            }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    const std::size_t n_workers = std::min<std::size_t>(std::max(1, spec.workers), n);
    if (n_workers == 1) {
        for (std::size_t i = 0; i < n; ++i) eval_point(i);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < n_workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += n_workers) eval_point(i);
            });
        }
        for (auto& th : threads) th.join();
    }

    std::string failed;
    for (std::size_t i = 0; i < n; ++i) {
        if (!errors[i].empty()) {
            failed += "\n  " + std::string(axis_name(spec.axis)) + " = " +
                      fmt9(spec.grid[i]) + ": " + errors[i];
        }
    }
    if (!failed.empty()) {
        throw std::runtime_error("sweep failed at grid points:" + failed);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const SweepSpec& spec) {
    std::string header = axis_name(spec.axis);
    if (spec.run_analytic) {
        header += ",phi_a_analytic,phi_b_analytic,aaoi_a_analytic,aaoi_b_analytic,"
                  "weighted_sum_analytic";
    }
    if (spec.run_mc) {
        header += ",phi_a_mc,phi_b_mc,aaoi_a_mc,aaoi_b_mc,weighted_sum_mc,"
                  "stderr_phi_a_mc,stderr_phi_b_mc,stderr_age_a_mc,stderr_age_b_mc";
    }
    out << header << "\n";
    for (const auto& row : rows) {
        out << fmt9(row.axis_value);
        if (spec.run_analytic) {
            const AoiReport& r = *row.analytic;
            out << ',' << fmt9(r.phi_a) << ',' << fmt9(r.phi_b) << ','
                << fmt9(r.aaoi_a) << ',' << fmt9(r.aaoi_b) << ','
                << fmt9(r.weighted_sum);
        }
        if (spec.run_mc) {
            const AoiReport& r = *row.mc;
            const AgeTrace& t = *row.mc_trace;
            const double counted = static_cast<double>(t.cycle_count - t.cycle_count / 100);
            const double se_a = std::sqrt(t.success_rate_a * (1.0 - t.success_rate_a) / counted);
            const double se_b = std::sqrt(t.success_rate_b * (1.0 - t.success_rate_b) / counted);
            out << ',' << fmt9(r.phi_a) << ',' << fmt9(r.phi_b) << ','
                << fmt9(r.aaoi_a) << ',' << fmt9(r.aaoi_b) << ','
                << fmt9(r.weighted_sum) << ',' << fmt9(se_a) << ',' << fmt9(se_b)
                << ',' << fmt9(t.stderr_age_a) << ',' << fmt9(t.stderr_age_b);
        }
        out << "\n";
    }
}

std::vector<std::string> emit_plotdata(const std::string& csv_path,
                                       const std::string& out_dir,
                                       const std::string& figure) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open CSV: " + csv_path);

    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        return cells;
    };

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + csv_path);
    const std::vector<std::string> header = split(line);
    if (header.size() < 2) throw std::runtime_error("malformed CSV header: " + csv_path);

    std::vector<std::pair<std::string, std::size_t>> curves; // method, column
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "weighted_sum_analytic") curves.emplace_back("analytic", c);
        if (header[c] == "weighted_sum_mc") curves.emplace_back("mc", c);
    }
    if (curves.empty()) throw std::runtime_error("CSV has no weighted_sum columns: " + csv_path);

    std::vector<std::vector<std::string>> data;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("malformed CSV row in " + csv_path + ": " + line);
        }
        data.push_back(std::move(cells));
    }
    if (data.empty()) throw std::runtime_error("CSV has no data rows: " + csv_path);

    std::filesystem::create_directories(out_dir);
    const std::string label = std::filesystem::path(csv_path).stem().string();
    std::vector<std::string> written;
    for (const auto& [method, col] : curves) {
        const std::string name = figure + "_" + method + "_" + label + ".dat";
        std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
        for (const auto& row : data) {
            // Re-format through fmt9 so reruns are byte-identical.
            out << fmt9(std::stod(row[0])) << ' ' << fmt9(std::stod(row[col])) << "\n";
        }
        written.push_back(name);
    }
    return written;
}

bool run_validate(const SystemConfig& cfg, std::uint64_t cycles,
                  std::uint64_t seed, int workers, const std::string& out_dir,
                  std::ostream& log) {
    validate_config(cfg);
    std::filesystem::create_directories(out_dir);
    bool all_ok = true;
    auto check = [&](const char* name, bool ok, const std::string& detail) {
        log << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        all_ok = all_ok && ok;
    };

    const GcqSettings gcq = gcq_of(cfg);
    const AoiReport analytic = evaluate_analytic(cfg, gcq);
    const double cycle_s = slot_durations(cfg).total();

    // Success probability: Eq-(5)-style product vs empirical delivery rate,
    // linearized decode model so only the independence approximation remains.
    {
        const SuccessEstimate est = estimate_success(cfg, cycles, seed,
                                                     DecodeModel::linearized, workers);
        const double tol_a = std::max(3.0 * est.stderr_a, 0.02);
        const double tol_b = std::max(3.0 * est.stderr_b, 0.02);
        const double gap_a = std::abs(est.phi_a - analytic.phi_a);
        const double gap_b = std::abs(est.phi_b - analytic.phi_b);
        std::ofstream csv(std::filesystem::path(out_dir) / "validate_success.csv",
                          std::ios::binary);
        csv << "source,phi_analytic,phi_mc,stderr_mc,gap\n";
        csv << "a," << fmt9(analytic.phi_a) << ',' << fmt9(est.phi_a) << ','
            << fmt9(est.stderr_a) << ',' << fmt9(gap_a) << "\n";
        csv << "b," << fmt9(analytic.phi_b) << ',' << fmt9(est.phi_b) << ','
            << fmt9(est.stderr_b) << ',' << fmt9(gap_b) << "\n";
        check("success-probability", gap_a <= tol_a && gap_b <= tol_b,
              "independence-approximation gap a=" + fmt9(gap_a) + " b=" + fmt9(gap_b) +
              " (tol a=" + fmt9(tol_a) + " b=" + fmt9(tol_b) + ")");
    }

    // Destination-SNR CDF vs the empirical CDF, sup distance against the
    // 99% DKW band.
    {
        const LinearizationCoeffs c = linearization({cfg.n_ra, cfg.k_ra});
        std::vector<double> grid(50);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid[i] = 2.0 * c.delta_high * static_cast<double>(i) / (grid.size() - 1);
        }
        const std::uint64_t trials = std::max<std::uint64_t>(cycles, 10000);
        const std::vector<double> emp =
            oracle_cdf_dest_snr(cfg, SourceId::A, grid, trials, seed + 17, workers);
        double sup = 0.0;
        std::ofstream csv(std::filesystem::path(out_dir) / "validate_cdf.csv",
                          std::ios::binary);
        csv << "z,cdf_analytic,cdf_empirical\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double ana = cdf_dest_snr(grid[i], SourceId::A, cfg, gcq);
            sup = std::max(sup, std::abs(ana - emp[i]));
            csv << fmt9(grid[i]) << ',' << fmt9(ana) << ',' << fmt9(emp[i]) << "\n";
        }
        const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * trials));
        check("dest-snr-cdf", sup <= band,
              "sup gap " + fmt9(sup) + " vs DKW band " + fmt9(band));
    }

    // Renewal identity and analytic-vs-MC AAoI.
    {
        const McPointReport mc = run_point_mc(cfg, cycles, seed + 41,
                                              DecodeModel::exact_q, workers);
        const AgeTrace& t = mc.trace;
        const double pred_a = 0.5 * cycle_s + cycle_s / t.success_rate_a;
        const double pred_b = 0.5 * cycle_s + cycle_s / t.success_rate_b;
        const bool renewal_ok =
            std::abs(t.time_avg_age_a - pred_a) <= 3.0 * t.stderr_age_a &&
            std::abs(t.time_avg_age_b - pred_b) <= 3.0 * t.stderr_age_b;
        check("renewal-identity", renewal_ok,
              "age a=" + fmt9(t.time_avg_age_a) + " vs T/2+T/phi=" + fmt9(pred_a) +
              " (3se=" + fmt9(3.0 * t.stderr_age_a) + ")");

        const double gap = std::abs(mc.report.weighted_sum - analytic.weighted_sum);
        const double tol = std::max(3.0 * mc.report.ci_radius,
                                    0.02 * analytic.weighted_sum);
        std::ofstream csv(std::filesystem::path(out_dir) / "validate_aoi.csv",
                          std::ios::binary);
        csv << "quantity,analytic,mc,stderr_mc\n";
        csv << "aaoi_a," << fmt9(analytic.aaoi_a) << ',' << fmt9(mc.report.aaoi_a)
            << ',' << fmt9(t.stderr_age_a) << "\n";
        csv << "aaoi_b," << fmt9(analytic.aaoi_b) << ',' << fmt9(mc.report.aaoi_b)
            << ',' << fmt9(t.stderr_age_b) << "\n";
        csv << "weighted_sum," << fmt9(analytic.weighted_sum) << ','
            << fmt9(mc.report.weighted_sum) << ',' << fmt9(mc.report.ci_radius) << "\n";
        check("weighted-sum-aaoi", gap <= tol,
              "gap " + fmt9(gap) + " s vs tol " + fmt9(tol) + " s");
    }

    return all_ok;
}

} // namespace swiptaoi
