#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swiptaoi/analytic.hpp"
#include "swiptaoi/mcsim.hpp"

namespace swiptaoi {

enum class SweepAxis { power, blocklength, update_bits, p_min, rho, distance };

SweepAxis parse_axis(const std::string& name);
const char* axis_name(SweepAxis axis);

/// One sweep: an axis, an ordered strictly-increasing grid, and which
/// methods to evaluate at each point.
struct SweepSpec {
    SweepAxis axis = SweepAxis::power;
    std::vector<double> grid;
    bool run_analytic = true;
    bool run_mc = false;
    std::uint64_t mc_cycles = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Parses "start:stop:steps" or "start:stop:steps:log" into a grid.
std::vector<double> parse_grid(const std::string& text);

struct SweepRow {
    double axis_value;
    std::optional<AoiReport> analytic;
    std::optional<AoiReport> mc;
    std::optional<AgeTrace> mc_trace;
};

/// Applies one axis value to a copy of the base config. Blocklength and
/// update-bits sweeps set all four links equal (values must be positive
/// integers); power sets both sources; distance sets both uplink distances.
SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value);

/// Evaluates every grid point. Grid points are independent and are spread
/// over `spec.workers` threads; rows come back in grid order regardless of
/// completion order. Throws listing the failing points if any point fails.
std::vector<SweepRow> run_sweep(const SystemConfig& base, const SweepSpec& spec);

/// CSV with a mandatory header row, LF line endings, 9 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const SweepSpec& spec);

/// Splits a sweep CSV into per-curve x/y files named
/// <figure>_<method>_<label>.dat under out_dir (whitespace-delimited,
/// 9 significant digits). Returns the file names written.
/// Throws on malformed or empty CSV.
std::vector<std::string> emit_plotdata(const std::string& csv_path,
                                       const std::string& out_dir,
                                       const std::string& figure);

/// The analytic-vs-Monte-Carlo comparison suite behind the `validate` CLI
/// verb. Writes deterministic CSVs under out_dir and prints one pass/fail
/// line per check. Returns true iff all checks pass.
bool run_validate(const SystemConfig& cfg, std::uint64_t cycles,
                  std::uint64_t seed, int workers, const std::string& out_dir,
                  std::ostream& log);

} // namespace swiptaoi
