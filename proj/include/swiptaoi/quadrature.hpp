#pragma once

#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace swiptaoi {

/// Adaptive Gauss-Kronrod integration. `b` may be +infinity. Throws
/// std::runtime_error if the error estimate stays above `abs_tol`.
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-9) {
    using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    const double v = rule::integrate(f, a, b, 15, 1e-13, &err);
    if (err > abs_tol && err > 1e-11 * std::abs(v)) {
        throw std::runtime_error("quadrature did not converge: error estimate "
                                 + std::to_string(err));
    }
    return v;
}

} // namespace swiptaoi
