#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "swiptaoi/channel.hpp"
#include "swiptaoi/quadrature.hpp"

using namespace swiptaoi;

TEST_CASE("path loss: free-space formula against dB-domain arithmetic") {
    // Independent route: -10 log10(alpha) = 20 log10(d) + 20 log10(4 pi f / c).
    const double db = 20.0 * std::log10(30.0) +
                      20.0 * std::log10(4.0 * std::numbers::pi * 900e6 / 3e8);
    const double expected = std::pow(10.0, -db / 10.0);
    const double alpha = path_loss_alpha({30.0, 900e6});
    CHECK(alpha == doctest::Approx(expected).epsilon(1e-12));
    CHECK(alpha == doctest::Approx(7.82e-7).epsilon(1e-3));
}

TEST_CASE("path loss: unit-gain distance and inverse-square law") {
    const double f = 900e6;
    const double d_unit = kSpeedOfLight / (4.0 * std::numbers::pi * f);
    CHECK(path_loss_alpha({d_unit, f}) == doctest::Approx(1.0).epsilon(1e-12));
    const double a1 = path_loss_alpha({25.0, f});
    const double a2 = path_loss_alpha({50.0, f});
    CHECK(a1 / a2 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("path loss: strictly decreasing in d and f, rejects bad input") {
    double prev = path_loss_alpha({1.0, 900e6});
    for (double d = 2.0; d <= 100.0; d += 1.0) {
        const double a = path_loss_alpha({d, 900e6});
        CHECK(a < prev);
        prev = a;
    }
    prev = path_loss_alpha({30.0, 1e8});
    for (double f = 2e8; f <= 3e9; f += 1e8) {
        const double a = path_loss_alpha({30.0, f});
        CHECK(a < prev);
        prev = a;
    }
    CHECK_THROWS_AS(path_loss_alpha({0.0, 900e6}), std::invalid_argument);
    CHECK_THROWS_AS(path_loss_alpha({30.0, -1.0}), std::invalid_argument);
}

TEST_CASE("fading: unit mean, exponential CDF, determinism") {
    const std::size_t n = 1000000;
    double sum = 0.0;
    std::size_t below_one = 0;
    for (std::size_t t = 0; t < n; ++t) {
        TrialRng rng(42, t);
        const FadingDraw d = sample_fading(rng);
        sum += d.g_ar;
        below_one += d.g_ar <= 1.0;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.004));
    CHECK(static_cast<double>(below_one) / n ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(0.004));

    TrialRng a(7, 3), b(7, 3);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("fading: DKW band agreement with the unit exponential") {
    const std::size_t n = 100000;
    std::vector<double> draws(n);
    for (std::size_t t = 0; t < n; ++t) {
        TrialRng rng(123, t);
        draws[t] = rng.exponential();
    }
    std::sort(draws.begin(), draws.end());
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = exp_cdf(draws[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        sup = std::max(sup, std::max(std::abs(f - lo), std::abs(f - hi)));
    }
    const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * n));
    CHECK(sup < band);
}

TEST_CASE("exp distribution basics") {
    CHECK(exp_cdf(0.0) == 0.0);
    CHECK(exp_cdf(std::numbers::ln2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(exp_cdf(1e3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exp_cdf(-1.0) == 0.0);
    CHECK(exp_pdf(0.0) == 1.0);
    CHECK(exp_pdf(-0.5) == 0.0);
}

TEST_CASE("hypoexp pdf: Erlang start, normalization, convolution oracle") {
    const HypoExpParams equal{0.7, 0.7};
    CHECK(hypoexp_pdf(0.0, equal) == 0.0);

    const HypoExpParams p{1.0, 2.0};
    const double mass = integrate([&](double z) { return hypoexp_pdf(z, p); },
                                  0.0, std::numeric_limits<double>::infinity());
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));

    // Oracle: direct numerical convolution of the two exponential densities.
    const double z = 1.0;
    const double conv = integrate(
        [&](double x) {
            return std::exp(-x / p.scale_a) / p.scale_a *
                   std::exp(-(z - x) / p.scale_b) / p.scale_b;
        },
        0.0, z);
    CHECK(hypoexp_pdf(z, p) == doctest::Approx(conv).epsilon(1e-9));

    CHECK_THROWS_AS(hypoexp_pdf(1.0, HypoExpParams{-1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("hypoexp cdf: frozen points and empirical DKW check") {
    const HypoExpParams p{0.3, 0.3};
    CHECK(hypoexp_cdf(0.0, p) == 0.0);
    // Equal scales s at z = s: 1 - 2/e.
    CHECK(hypoexp_cdf(0.3, p) ==
          doctest::Approx(1.0 - 2.0 / std::numbers::e).epsilon(1e-12));

    const HypoExpParams q{1.0, 2.5};
    const std::size_t n = 1000000;
    std::vector<double> sums(n);
    for (std::size_t t = 0; t < n; ++t) {
        TrialRng rng(99, t);
        sums[t] = q.scale_a * rng.exponential() + q.scale_b * rng.exponential();
    }
    std::sort(sums.begin(), sums.end());
    double sup = 0.0;
    for (std::size_t i = 0; i < n; i += 97) {
        const double f = hypoexp_cdf(sums[i], q);
        sup = std::max(sup, std::abs(f - static_cast<double>(i + 1) / n));
    }
    const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * n));
    CHECK(sup < band);

    CHECK_THROWS_AS(hypoexp_cdf(1.0, HypoExpParams{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("hypoexp: cdf is the integral of the pdf") {
    const HypoExpParams p{0.8, 1.9};
    for (int i = 1; i <= 100; ++i) {
        const double z = 0.08 * i;
        const double from_pdf = integrate([&](double x) { return hypoexp_pdf(x, p); },
                                          0.0, z, 1e-10);
        CHECK(hypoexp_cdf(z, p) == doctest::Approx(from_pdf).epsilon(1e-8));
    }
    // Monotone nondecreasing, range [0, 1].
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double f = hypoexp_cdf(0.02 * i, p);
        CHECK(f >= prev);
        CHECK(f <= 1.0);
        prev = f;
    }
}

TEST_CASE("hypoexp: distinct branch converges to the tie branch") {
    const double a = 2.0;
    const double b = a * (1.0 + 1e-6); // just outside the tie tolerance
    const HypoExpParams near{a, b};
    const HypoExpParams tie{a, a};
    for (double z : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        CHECK(hypoexp_cdf(z, near) == doctest::Approx(hypoexp_cdf(z, tie)).epsilon(1e-4));
    }
}
