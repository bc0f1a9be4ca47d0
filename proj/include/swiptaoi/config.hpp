#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace swiptaoi {

/// Scenario parameters for the two-way SWIPT relay network. All values in SI
/// base units (W, m, Hz, s, J). This is the single source of truth for a
/// scenario; every other module derives from it.
struct SystemConfig {
    // Source transmit powers [W]
    double p_a = 1.0;
    double p_b = 1.0;

    // Source-to-relay distances [m] and carrier frequency [Hz]
    double d_ar = 30.0;
    double d_br = 30.0;
    double carrier_hz = 900e6;

    // Symbol duration [s]
    double t_s = 20e-6;

    // Blocklengths [channel uses]: uplink A->R, B->R; downlink R->A, R->B
    int n_ar = 200;
    int n_br = 200;
    int n_ra = 200;
    int n_rb = 200;

    // Information bits per update on each link
    int k_ar = 32;
    int k_br = 32;
    int k_ra = 32;
    int k_rb = 32;

    // Noise powers [W] (-100 dBm default)
    double noise_r = 1e-13;
    double noise_a = 1e-13;
    double noise_b = 1e-13;

    // Power splitting factor and energy conversion efficiency
    double rho = 0.5;
    double eta = 0.9;

    // Harvest cap [J] and minimum relay transmit power [W]
    double e_max = 1e-3;
    double p_min = 1e-7;

    // AAoI weights
    double w_a = 0.5;
    double w_b = 0.5;

    // Gauss-Chebyshev node counts (outer error integral / inner L4 integral)
    int gcq_v = 100;
    int gcq_m = 100;
};

/// Validates every invariant of the config. Throws std::invalid_argument
/// naming the offending key on the first violation found.
void validate_config(const SystemConfig& cfg);

/// Parses a flat `key = value` text file (# comments, SI base units, keys
/// equal to the SystemConfig field names). Unknown keys and non-numeric
/// values are rejected. Starts from defaults; only listed keys change.
SystemConfig load_config(const std::string& path);

/// Same parser operating on an already-read buffer.
SystemConfig parse_config(std::istream& in, const std::string& origin);

/// Applies `key = value` overrides on top of cfg (flag wins over file).
void apply_overrides(SystemConfig& cfg, const std::map<std::string, double>& overrides);

/// Writes cfg in the exact format load_config reads (round-trips).
void write_config(std::ostream& out, const SystemConfig& cfg);

std::string config_to_string(const SystemConfig& cfg);

/// Recognized config keys, in file order.
std::vector<std::string> config_keys();

} // namespace swiptaoi
