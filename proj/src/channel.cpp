#include "swiptaoi/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swiptaoi {

double path_loss_alpha(const LinkGeometry& geom) {
    if (!(geom.distance_m > 0.0)) {
        throw std::invalid_argument("path_loss_alpha: distance_m must be > 0");
    }
    if (!(geom.carrier_hz > 0.0)) {
        throw std::invalid_argument("path_loss_alpha: carrier_hz must be > 0");
    }
    const double x = kSpeedOfLight / (4.0 * std::numbers::pi * geom.carrier_hz * geom.distance_m);
    return x * x;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream) {
    // Mix seed and stream index so that nearby streams are uncorrelated.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    (void)splitmix64(s);
    (void)splitmix64(s);
    state_ = s;
}

std::uint64_t TrialRng::next_u64() {
    return splitmix64(state_);
}

double TrialRng::uniform() {
    // 53-bit mantissa, shifted into (0, 1): never returns 0 or 1.
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double TrialRng::exponential() {
    return -std::log(uniform());
}

FadingDraw sample_fading(TrialRng& rng) {
    FadingDraw d;
    d.g_ar = rng.exponential();
    d.g_br = rng.exponential();
    d.g_ra = rng.exponential();
    d.g_rb = rng.exponential();
    return d;
}

double exp_pdf(double z) {
    return z >= 0.0 ? std::exp(-z) : 0.0;
}

double exp_cdf(double z) {
    return z >= 0.0 ? -std::expm1(-z) : 0.0;
}

namespace {

void check_scales(const HypoExpParams& p) {
    if (!(p.scale_a > 0.0) || !(p.scale_b > 0.0)) {
        throw std::invalid_argument("hypoexp: scales must be positive");
    }
}

bool tied_scales(const HypoExpParams& p) {
    return std::abs(p.scale_a - p.scale_b) <= 1e-9 * std::max(p.scale_a, p.scale_b);
}

} // namespace

double hypoexp_pdf(double z, const HypoExpParams& p) {
    check_scales(p);
    if (z < 0.0) return 0.0;
    if (tied_scales(p)) {
        const double s = p.scale_a;
        return z / (s * s) * std::exp(-z / s);
    }
    const double a = p.scale_a, b = p.scale_b;
    return (std::exp(-z / a) - std::exp(-z / b)) / (a - b);
}

double hypoexp_cdf(double z, const HypoExpParams& p) {
    check_scales(p);
    if (z <= 0.0) return 0.0;
    if (tied_scales(p)) {
        const double x = z / p.scale_a;
        return -std::expm1(-x + std::log1p(x));
    }
    const double a = p.scale_a, b = p.scale_b;
    const double v = 1.0 + (b * std::exp(-z / b) - a * std::exp(-z / a)) / (a - b);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace swiptaoi
