#include "swiptaoi/fbl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swiptaoi {

namespace {

constexpr double kLog2E = std::numbers::log2e;

void check_code(const LinkCode& code) {
    if (code.n < 1) throw std::invalid_argument("LinkCode: n must be >= 1");
    if (code.k < 0) throw std::invalid_argument("LinkCode: k must be >= 0");
}

} // namespace

double capacity(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("capacity: gamma must be >= 0");
    return std::log1p(gamma) * kLog2E;
}

double dispersion(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("dispersion: gamma must be >= 0");
    const double inv = 1.0 / (1.0 + gamma);
    return 0.5 * kLog2E * kLog2E * (1.0 - inv * inv);
}

double q_function(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double eps_conditional(double gamma, const LinkCode& code) {
    check_code(code);
    if (gamma < 0.0) throw std::invalid_argument("eps_conditional: gamma must be >= 0");
    if (code.k == 0) return 0.0;
    if (gamma == 0.0) return 1.0; // V(0) = 0; the limit from the right is 1
    const double n = static_cast<double>(code.n);
    const double arg = (n * capacity(gamma) - code.k) / std::sqrt(n * dispersion(gamma));
    return std::clamp(q_function(arg), 0.0, 1.0);
}

LinearizationCoeffs linearization(const LinkCode& code) {
    check_code(code);
    const double rate = static_cast<double>(code.k) / code.n;
    LinearizationCoeffs c;
    c.psi = std::exp2(rate) - 1.0;
    c.beta = 1.0 / (2.0 * std::numbers::pi * std::sqrt(std::exp2(2.0 * rate) - 1.0));
    const double half = 1.0 / (2.0 * c.beta * std::sqrt(static_cast<double>(code.n)));
    c.phi_low = c.psi - half;
    c.delta_high = c.psi + half;
    return c;
}

double theta(double gamma, const LinearizationCoeffs& c, int n) {
    if (gamma <= c.phi_low) return 1.0;
    if (gamma >= c.delta_high) return 0.0;
    return 0.5 - c.beta * std::sqrt(static_cast<double>(n)) * (gamma - c.psi);
}

} // namespace swiptaoi
