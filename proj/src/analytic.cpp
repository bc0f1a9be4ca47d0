#include "swiptaoi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "swiptaoi/channel.hpp"
#include "swiptaoi/fbl.hpp"
#include "swiptaoi/quadrature.hpp"

namespace swiptaoi {

namespace {

LinkCode uplink_code(SourceId source, const SystemConfig& cfg) {
    return source == SourceId::A ? LinkCode{cfg.n_ar, cfg.k_ar}
                                 : LinkCode{cfg.n_br, cfg.k_br};
}

LinkCode downlink_code(SourceId dest, const SystemConfig& cfg) {
    return dest == SourceId::A ? LinkCode{cfg.n_ra, cfg.k_ra}
                               : LinkCode{cfg.n_rb, cfg.k_rb};
}

/// Mean uplink SNR (1 - rho) P alpha / sigma_R^2.
double mean_relay_snr(SourceId source, const SystemConfig& cfg) {
    const double d = source == SourceId::A ? cfg.d_ar : cfg.d_br;
    const double p = source == SourceId::A ? cfg.p_a : cfg.p_b;
    const double alpha = path_loss_alpha({d, cfg.carrier_hz});
    return (1.0 - cfg.rho) * p * alpha / cfg.noise_r;
}

HypoExpParams harvest_params(const SystemConfig& cfg) {
    const double a_ar = path_loss_alpha({cfg.d_ar, cfg.carrier_hz});
    const double a_br = path_loss_alpha({cfg.d_br, cfg.carrier_hz});
    return {cfg.p_a * a_ar, cfg.p_b * a_br};
}

double chebyshev_node(int m, int count) {
    return std::cos((2.0 * m - 1.0) / (2.0 * count) * std::numbers::pi);
}

} // namespace

double eps_relay_closed_form(SourceId source, const SystemConfig& cfg) {
    const LinkCode code = uplink_code(source, cfg);
    if (code.k == 0) return 0.0;
    if (cfg.rho >= 1.0) return 1.0; // all received power harvested, none decoded
    const LinearizationCoeffs c = linearization(code);
    const double mu = mean_relay_snr(source, cfg);
    const double bsn = c.beta * std::sqrt(static_cast<double>(code.n));
    // beta sqrt(n) * integral of 1 - e^{-z/mu} over [max(phi,0), delta].
    // Naively (delta - lo) - mu (e^{-lo/mu} - e^{-delta/mu}), but at high mean
    // SNR that difference cancels to round-off. Split as
    //   w (1 - e^{-a}) + e^{-a} mu (expm1(-u) + u),  a = lo/mu, u = w/mu,
    // with a series for expm1(-u) + u when u is tiny.
    const double lo = std::max(c.phi_low, 0.0);
    const double w = c.delta_high - lo;
    const double a = lo / mu;
    const double u = w / mu;
    const double g = u < 1e-3
                         ? u * u * (0.5 - u / 6.0 + u * u / 24.0)
                         : std::expm1(-u) + u;
    const double eps = bsn * (-w * std::expm1(-a) + std::exp(-a) * mu * g);
    return std::clamp(eps, 0.0, 1.0);
}

double cdf_dest_snr(double z, SourceId dest, const SystemConfig& cfg,
                    const GcqSettings& gcq) {
    if (z < 0.0) return 0.0;
    if (gcq.nodes_m < 1) throw std::invalid_argument("GcqSettings: nodes_m must be >= 1");
    if (cfg.rho <= 0.0 || cfg.eta <= 0.0) return 1.0; // no harvest, relay never transmits

    const SlotDurations s = slot_durations(cfg);
    const double pool = cfg.rho * cfg.eta * s.t1; // converts I [W] to energy [J]
    const double e_min = cfg.p_min * s.t2;
    double omega1 = e_min / pool;
    const double omega2 = cfg.e_max / pool;
    // p_min = 0 makes the off regime a null event; nudge omega1 off zero so
    // the Omega3/Omega1 ratios stay finite. The probability shift is O(1e-24).
    omega1 = std::max(omega1, omega2 * 1e-12);

    const double d = dest == SourceId::A ? cfg.d_ar : cfg.d_br;
    const double sigma2 = dest == SourceId::A ? cfg.noise_a : cfg.noise_b;
    const double alpha = path_loss_alpha({d, cfg.carrier_hz});
    const double omega3 = z * sigma2 * s.t2 / (pool * alpha);
    const double omega4 = z * sigma2 * s.t2 / (cfg.e_max * alpha); // = omega3/omega2

    const HypoExpParams ip = harvest_params(cfg);
    const double fi_o1 = hypoexp_cdf(omega1, ip);
    const double fi_o2 = hypoexp_cdf(omega2, ip);

    const double x_hi = omega3 / omega1;
    const double x_lo = omega4;

    // L2: capped regime, g above the cap threshold.
    const double l2 = (1.0 - fi_o2) * (1.0 - exp_cdf(x_lo));

    // L4: Gauss-Chebyshev over x in [x_lo, x_hi] of f_g(x) F_I(omega3/x).
    // For large z the upper limit omega3/omega1 can reach 1e6 while all the
    // mass sits under the e^{-x} factor; truncate where that factor is below
    // 1e-20 so the nodes land on the mass.
    double l4 = 0.0;
    if (omega3 > 0.0) {
        const double x_cut = std::min(x_hi, std::max(x_lo, 0.0) + 46.0);
        const double half = 0.5 * (x_cut - x_lo);
        const double mid = 0.5 * (x_cut + x_lo);
        const int m_nodes = gcq.nodes_m;
        double acc = 0.0;
        for (int m = 1; m <= m_nodes; ++m) {
            const double t = chebyshev_node(m, m_nodes);
            const double x = half * t + mid;
            acc += std::sqrt(1.0 - t * t) * exp_pdf(x) * hypoexp_cdf(omega3 / x, ip);
        }
        l4 = half * std::numbers::pi / m_nodes * acc;
    }

    const double l3 = fi_o2 * (exp_cdf(x_hi) - exp_cdf(x_lo)) - l4;
    const double l1 = l3 + (fi_o2 - fi_o1) * (1.0 - exp_cdf(x_hi));

    return std::clamp(1.0 - l1 - l2, 0.0, 1.0);
}

double eps_dest_gcq(SourceId dest, const SystemConfig& cfg, const GcqSettings& gcq) {
    if (gcq.nodes_v < 1) throw std::invalid_argument("GcqSettings: nodes_v must be >= 1");
    const LinkCode code = downlink_code(dest, cfg);
    if (code.k == 0) return 0.0;
    const LinearizationCoeffs c = linearization(code);
    const double half = 0.5 * (c.delta_high - c.phi_low);
    const double mid = 0.5 * (c.delta_high + c.phi_low);
    double acc = 0.0;
    for (int v = 1; v <= gcq.nodes_v; ++v) {
        const double t = chebyshev_node(v, gcq.nodes_v);
        const double q = half * t + mid;
        acc += std::sqrt(1.0 - t * t) * cdf_dest_snr(q, dest, cfg, gcq);
    }
    const double h = std::numbers::pi / gcq.nodes_v;
    double integral = half * h * acc;
    // The node sum is the midpoint rule in theta for z = mid + half cos(theta);
    // its leading error is the Euler-Maclaurin endpoint term
    // (h^2/24)(g'(pi) - g'(0)) with g'(0) = half F(delta), g'(pi) = -half F(phi).
    // Adding it keeps the same nodes and upgrades the rule to O(V^-4).
    const double f_lo = cdf_dest_snr(c.phi_low, dest, cfg, gcq);
    const double f_hi = cdf_dest_snr(c.delta_high, dest, cfg, gcq);
    integral -= h * h / 24.0 * half * (f_lo + f_hi);
    const double bsn = c.beta * std::sqrt(static_cast<double>(code.n));
    return std::clamp(bsn * integral, 0.0, 1.0);
}

namespace {

/// d/dz of the conditional error kernel, negated (nonnegative).
double neg_eps_conditional_slope(double z, const LinkCode& code) {
    const double n = static_cast<double>(code.n);
    const double c = capacity(z);
    const double v = dispersion(z);
    const double cp = std::numbers::log2e / (1.0 + z);
    const double inv = 1.0 / (1.0 + z);
    const double vp = std::numbers::log2e * std::numbers::log2e * inv * inv * inv;
    const double u = (n * c - code.k) / std::sqrt(n * v);
    const double up = cp * std::sqrt(n / v) - (n * c - code.k) * vp / (2.0 * std::sqrt(n) * v * std::sqrt(v));
    const double normal_pdf = std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
    return normal_pdf * up;
}

} // namespace

double eps_exact_numeric(LinkKind kind, SourceId node, const SystemConfig& cfg,
                         const GcqSettings& gcq) {
    if (kind == LinkKind::relay_bound) {
        const LinkCode code = uplink_code(node, cfg);
        if (code.k == 0) return 0.0;
        if (cfg.rho >= 1.0) return 1.0;
        const double mu = mean_relay_snr(node, cfg);
        const double eps = integrate(
            [&](double z) {
                return std::exp(-z / mu) / mu * eps_conditional(z, code);
            },
            0.0, std::numeric_limits<double>::infinity(), 1e-9);
        return std::clamp(eps, 0.0, 1.0);
    }
    const LinkCode code = downlink_code(node, cfg);
    if (code.k == 0) return 0.0;
    // Integration by parts against the CDF: eps = int F(z) (-d eps/dz) dz.
    // The kernel slope is a Gaussian bump around psi, so the mass lives in a
    // few kernel widths; beyond that the integrand is below 1e-14.
    const LinearizationCoeffs c = linearization(code);
    const double width = c.delta_high - c.phi_low;
    const double z_hi = c.delta_high + 8.0 * width;
    const double eps = integrate(
        [&](double z) {
            return cdf_dest_snr(z, node, cfg, gcq) * neg_eps_conditional_slope(z, code);
        },
        0.0, z_hi, 1e-9);
    return std::clamp(eps, 0.0, 1.0);
}

double success_probability(double eps_r, double eps_d) {
    if (eps_r < 0.0 || eps_r > 1.0 || eps_d < 0.0 || eps_d > 1.0) {
        throw std::invalid_argument("success_probability: inputs must be in [0, 1]");
    }
    return (1.0 - eps_r) * (1.0 - eps_d);
}

double aaoi(double cycle_s, double phi) {
    if (!(cycle_s > 0.0)) throw std::invalid_argument("aaoi: cycle length must be > 0");
    if (phi < 0.0 || phi > 1.0) throw std::invalid_argument("aaoi: phi must be in [0, 1]");
    if (phi == 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * cycle_s + cycle_s / phi;
}

double weighted_sum_aaoi(double aaoi_a, double aaoi_b, double w_a, double w_b) {
    if (w_a < 0.0 || w_b < 0.0) {
        throw std::invalid_argument("weighted_sum_aaoi: weights must be >= 0");
    }
    return w_a * aaoi_a + w_b * aaoi_b;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::exact_quadrature: return "exact-quadrature";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

namespace {

AoiReport combine(const SystemConfig& cfg, double er_a, double er_b,
                  double ed_a, double ed_b, Method method) {
    AoiReport r;
    r.eps_relay_a = er_a;
    r.eps_relay_b = er_b;
    r.eps_dest_a = ed_a;
    r.eps_dest_b = ed_b;
    // The update received at i travels i' -> R -> i.
    r.phi_a = success_probability(er_b, ed_a);
    r.phi_b = success_probability(er_a, ed_b);
    const double cycle = slot_durations(cfg).total();
    r.aaoi_a = aaoi(cycle, r.phi_a);
    r.aaoi_b = aaoi(cycle, r.phi_b);
    r.weighted_sum = weighted_sum_aaoi(r.aaoi_a, r.aaoi_b, cfg.w_a, cfg.w_b);
    r.method = method;
    r.ci_radius = 0.0;
    return r;
}

} // namespace

AoiReport evaluate_analytic(const SystemConfig& cfg, const GcqSettings& gcq) {
    return combine(cfg,
                   eps_relay_closed_form(SourceId::A, cfg),
                   eps_relay_closed_form(SourceId::B, cfg),
                   eps_dest_gcq(SourceId::A, cfg, gcq),
                   eps_dest_gcq(SourceId::B, cfg, gcq),
                   Method::closed_form);
}

AoiReport evaluate_exact(const SystemConfig& cfg, const GcqSettings& gcq) {
    return combine(cfg,
                   eps_exact_numeric(LinkKind::relay_bound, SourceId::A, cfg, gcq),
                   eps_exact_numeric(LinkKind::relay_bound, SourceId::B, cfg, gcq),
                   eps_exact_numeric(LinkKind::dest_bound, SourceId::A, cfg, gcq),
                   eps_exact_numeric(LinkKind::dest_bound, SourceId::B, cfg, gcq),
                   Method::exact_quadrature);
}

} // namespace swiptaoi
