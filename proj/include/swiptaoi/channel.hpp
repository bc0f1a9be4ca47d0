#pragma once

#include <cstdint>

namespace swiptaoi {

inline constexpr double kSpeedOfLight = 3e8; // m/s

struct LinkGeometry {
    double distance_m;
    double carrier_hz;
};

/// Free-space large-scale power gain alpha = (c / (4 pi f d))^2.
/// Throws std::invalid_argument for non-positive distance or frequency.
double path_loss_alpha(const LinkGeometry& geom);

/// One realization of the four small-scale power gains per transmission
/// cycle. Each is unit-mean exponential under Rayleigh fading.
struct FadingDraw {
    double g_ar;
    double g_br;
    double g_ra;
    double g_rb;
};

/// Counter-derived pseudo-random stream (splitmix64). Stream s of a run with
/// master seed m is fully determined by (m, s), so trial t of a simulation is
/// reproducible independent of thread count.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform on (0, 1).
    double uniform();
    /// Unit-mean exponential variate.
    double exponential();

private:
    std::uint64_t state_;
};

/// Draws the four independent link gains in a fixed order (AR, BR, RA, RB).
FadingDraw sample_fading(TrialRng& rng);

/// Unit exponential density, e^{-z} for z >= 0, else 0.
double exp_pdf(double z);
/// Unit exponential CDF, 1 - e^{-z} for z >= 0, else 0.
double exp_cdf(double z);

/// Scale parameters (means) of the two exponential summands of the harvested
/// power variable I = P_A a_AR g_AR + P_B a_BR g_BR.
struct HypoExpParams {
    double scale_a;
    double scale_b;
};

/// Density of the sum of two independent exponentials. Uses the equal-rate
/// (Erlang-2) branch when |a-b| <= 1e-9 * max(a,b); the distinct-rate branch
/// cancels catastrophically near the tie.
double hypoexp_pdf(double z, const HypoExpParams& p);
/// CDF companion of hypoexp_pdf, same branch rule.
double hypoexp_cdf(double z, const HypoExpParams& p);

} // namespace swiptaoi
