#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swiptaoi/analytic.hpp"
#include "swiptaoi/channel.hpp"
#include "swiptaoi/config.hpp"
#include "swiptaoi/energy.hpp"

namespace swiptaoi {

/// Which conditional error curve drives the decode Bernoullis:
/// the exact Q-kernel (default oracle) or the piecewise-linear surrogate
/// (isolates the CDF/GCQ error from the linearization error).
enum class DecodeModel { exact_q, linearized };

/// One transmission cycle. delivered_a means the update destined to source A
/// (originating at B) got through: decode(B->R) and decode(R->A) and the
/// relay had energy to transmit.
struct TrialOutcome {
    FadingDraw draw;
    EnergyOutcome energy;
    double gamma_relay_a; // SNR at relay of A's uplink packet
    double gamma_relay_b;
    double gamma_dest_a;  // downlink SNR at A
    double gamma_dest_b;
    bool delivered_a;
    bool delivered_b;
};

/// Simulates one full cycle from the given stream. Draw order is fixed:
/// four fading gains, then four decode uniforms (AR, BR, RA, RB).
TrialOutcome run_trial(TrialRng& rng, const SystemConfig& cfg, DecodeModel model);

struct SuccessEstimate {
    double phi_a;
    double phi_b;
    double stderr_a; // binomial standard error
    double stderr_b;
    std::uint64_t trials;
};

/// Empirical delivery fractions over `trials` independent cycles. Trial t
/// uses stream t of `seed`, so the result is independent of worker count.
SuccessEstimate estimate_success(const SystemConfig& cfg, std::uint64_t trials,
                                 std::uint64_t seed, DecodeModel model,
                                 int workers = 1);

struct AgeTrace {
    std::uint64_t cycle_count;
    double time_avg_age_a; // seconds
    double time_avg_age_b;
    double success_rate_a;
    double success_rate_b;
    double stderr_age_a;   // batch-means standard error, seconds
    double stderr_age_b;
};

/// Simulates the sawtooth age process exactly: per cycle of length T the age
/// grows linearly by T; on delivery it resets to T at the cycle boundary.
/// Initial age T; the first 1% of cycles are discarded as warm-up.
/// Deterministic for fixed (cfg, cycles, seed) at any worker count.
AgeTrace simulate_aoi(const SystemConfig& cfg, std::uint64_t cycles,
                      std::uint64_t seed, DecodeModel model, int workers = 1);

/// Empirical CDF of the downlink SNR at `dest` on the given grid.
std::vector<double> oracle_cdf_dest_snr(const SystemConfig& cfg, SourceId dest,
                                        std::span<const double> z_grid,
                                        std::uint64_t trials, std::uint64_t seed,
                                        int workers = 1);

struct InterdepartureMoments {
    double mean_s;        // empirical E[X] in seconds
    double second_s2;     // empirical E[X^2] in seconds^2
    std::uint64_t deliveries;
};

/// First and second empirical moments of the gaps between consecutive
/// deliveries to `dest`. Throws if fewer than 100 deliveries are observed.
InterdepartureMoments moment_check_interdeparture(const SystemConfig& cfg,
                                                  SourceId dest,
                                                  std::uint64_t cycles,
                                                  std::uint64_t seed,
                                                  DecodeModel model = DecodeModel::exact_q,
                                                  int workers = 1);

/// Time-average age of the deterministic sawtooth over explicit delivery
/// flags, initial age one cycle. Exposed so oracle patterns (all-success,
/// alternating, ...) can be checked directly.
double sawtooth_time_average(std::span<const std::uint8_t> delivered,
                             double cycle_s, std::uint64_t warmup = 0);

/// AgeTrace plus the per-link empirical error fractions, packaged as an
/// AoiReport with method = monte_carlo and ci_radius from the age stderr.
struct McPointReport {
    AgeTrace trace;
    AoiReport report;
};

McPointReport run_point_mc(const SystemConfig& cfg, std::uint64_t cycles,
                           std::uint64_t seed, DecodeModel model, int workers = 1);

} // namespace swiptaoi
