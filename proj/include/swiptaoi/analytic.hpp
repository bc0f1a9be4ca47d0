#pragma once

#include <string>

#include "swiptaoi/config.hpp"
#include "swiptaoi/energy.hpp"

namespace swiptaoi {

/// Node counts for the Gauss-Chebyshev quadratures: nodes_v for the outer
/// error-probability integral, nodes_m for the inner L4 integral.
struct GcqSettings {
    int nodes_v = 100;
    int nodes_m = 100;
};

/// Closed-form block error probability at the relay for the uplink packet
/// from `source` (exponential SNR, linearized kernel). Returns 1 at rho = 1.
double eps_relay_closed_form(SourceId source, const SystemConfig& cfg);

/// CDF of the downlink SNR at destination `dest`, via the
/// F(z) = 1 - L1 - L2 decomposition with the inner integral done by
/// Gauss-Chebyshev quadrature. Clamped to [0, 1]; returns 0 for z < 0.
/// F(0) equals the probability the relay is in the off regime.
double cdf_dest_snr(double z, SourceId dest, const SystemConfig& cfg,
                    const GcqSettings& gcq);

/// Block error probability at destination `dest`:
/// beta sqrt(n) * GCQ of cdf_dest_snr over [phi_low, delta_high].
double eps_dest_gcq(SourceId dest, const SystemConfig& cfg, const GcqSettings& gcq);

enum class LinkKind { relay_bound, dest_bound };

/// Reference error probability with the exact Q-kernel (no linearization):
/// adaptive quadrature of the kernel against the exact SNR law. Used to
/// quantify the linearization gap. Throws on quadrature non-convergence.
double eps_exact_numeric(LinkKind kind, SourceId node, const SystemConfig& cfg,
                         const GcqSettings& gcq = {});

/// phi = (1 - eps_r)(1 - eps_d).
double success_probability(double eps_r, double eps_d);

/// Average age T/2 + T/phi. phi = 0 yields +infinity, the distinguished
/// "unbounded age" value (sweeps render it as a gap, never a garbage number).
double aaoi(double cycle_s, double phi);

double weighted_sum_aaoi(double aaoi_a, double aaoi_b, double w_a, double w_b);

enum class Method { closed_form, exact_quadrature, monte_carlo };

const char* method_name(Method m);

/// Full evaluation of one scenario. eps_relay_i is the error of source i's
/// uplink packet at the relay; eps_dest_i the downlink error at destination i.
/// phi_a combines the opposite uplink with the own downlink:
/// phi_a = (1 - eps_relay_b)(1 - eps_dest_a).
struct AoiReport {
    double eps_relay_a = 0;
    double eps_relay_b = 0;
    double eps_dest_a = 0;
    double eps_dest_b = 0;
    double phi_a = 0;
    double phi_b = 0;
    double aaoi_a = 0;      // seconds; +inf when unbounded
    double aaoi_b = 0;
    double weighted_sum = 0;
    Method method = Method::closed_form;
    double ci_radius = 0;   // seconds; 0 for analytic methods
};

/// Analytic chain end to end: closed form for the relay errors,
/// GCQ for the destination errors, then the renewal AAoI formulas.
AoiReport evaluate_analytic(const SystemConfig& cfg, const GcqSettings& gcq = {});

/// Same chain with the exact Q-kernel on both hops (reference path).
AoiReport evaluate_exact(const SystemConfig& cfg, const GcqSettings& gcq = {});

} // namespace swiptaoi
