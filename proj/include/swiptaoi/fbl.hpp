#pragma once

namespace swiptaoi {

/// Finite-blocklength code: n channel uses carrying k information bits.
struct LinkCode {
    int n;
    int k;
};

/// AWGN capacity log2(1 + gamma) [bits per channel use].
double capacity(double gamma);

/// Channel dispersion V(gamma) = (log2^2 e / 2)(1 - (1+gamma)^-2).
double dispersion(double gamma);

/// Gaussian tail probability Q(x), absolute error <= 1e-12.
double q_function(double x);

/// Conditional block error probability Q((n C(gamma) - k) / sqrt(n V(gamma))).
/// Defined as 1 at gamma = 0 for k > 0 (zero capacity carries no bits) and 0
/// for k = 0. Clamped to [0, 1].
double eps_conditional(double gamma, const LinkCode& code);

/// Breakpoints and slope of the piecewise-linear surrogate for the Q-kernel.
struct LinearizationCoeffs {
    double beta;       // 1 / (2 pi sqrt(2^{2k/n} - 1))
    double psi;        // 2^{k/n} - 1
    double phi_low;    // psi - 1/(2 beta sqrt(n))
    double delta_high; // psi + 1/(2 beta sqrt(n))
};

LinearizationCoeffs linearization(const LinkCode& code);

/// Piecewise-linear surrogate: 1 below phi_low, 0 above delta_high,
/// 1/2 - beta sqrt(n) (gamma - psi) in between.
double theta(double gamma, const LinearizationCoeffs& c, int n);

} // namespace swiptaoi
