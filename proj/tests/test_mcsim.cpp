#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "swiptaoi/analytic.hpp"
#include "swiptaoi/channel.hpp"
#include "swiptaoi/energy.hpp"
#include "swiptaoi/mcsim.hpp"

using namespace swiptaoi;

TEST_CASE("trial bookkeeping: energy, SNRs, delivery gating") {
    const SystemConfig cfg;
    const SlotDurations s = slot_durations(cfg);
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(5, t);
        const TrialOutcome o = run_trial(rng, cfg, DecodeModel::exact_q);
        CHECK(o.energy.harvested_j ==
              doctest::Approx(harvested_energy(o.draw, cfg)).epsilon(1e-12));
        CHECK(o.energy.relay_power_w * s.t2 ==
              doctest::Approx(o.energy.available_j).epsilon(1e-12));
        CHECK(o.gamma_dest_a ==
              doctest::Approx(dest_snr(o.draw, o.energy, SourceId::A, cfg))
                  .epsilon(1e-12));
        CHECK(o.gamma_relay_b ==
              doctest::Approx(relay_snr(o.draw, SourceId::B, cfg)).epsilon(1e-12));
        if (o.energy.regime == EnergyRegime::off) {
            CHECK(!o.delivered_a);
            CHECK(!o.delivered_b);
            CHECK(o.gamma_dest_a == 0.0);
            CHECK(o.gamma_dest_b == 0.0);
        }
    }
}

TEST_CASE("determinism: results identical at any worker count") {
    const SystemConfig cfg;
    const SuccessEstimate s1 = estimate_success(cfg, 50000, 77, DecodeModel::exact_q, 1);
    const SuccessEstimate s4 = estimate_success(cfg, 50000, 77, DecodeModel::exact_q, 4);
    CHECK(s1.phi_a == s4.phi_a);
    CHECK(s1.phi_b == s4.phi_b);
    CHECK(s1.stderr_a == s4.stderr_a);

    const AgeTrace a1 = simulate_aoi(cfg, 50000, 123, DecodeModel::exact_q, 1);
    const AgeTrace a3 = simulate_aoi(cfg, 50000, 123, DecodeModel::exact_q, 3);
    CHECK(a1.time_avg_age_a == a3.time_avg_age_a);
    CHECK(a1.time_avg_age_b == a3.time_avg_age_b);
    CHECK(a1.success_rate_a == a3.success_rate_a);
    CHECK(a1.stderr_age_a == a3.stderr_age_a);

    // Different seeds give different draws.
    const SuccessEstimate other = estimate_success(cfg, 50000, 78, DecodeModel::exact_q, 1);
    CHECK(s1.phi_a != other.phi_a);
}

TEST_CASE("degenerate limits: full harvest kills decoding, high power saturates") {
    SystemConfig all_harvest;
    all_harvest.rho = 1.0;
    const SuccessEstimate dead =
        estimate_success(all_harvest, 20000, 9, DecodeModel::exact_q, 2);
    CHECK(dead.phi_a == 0.0);
    CHECK(dead.phi_b == 0.0);

    SystemConfig strong;
    strong.p_a = 50.0;
    strong.p_b = 50.0;
    strong.p_min = 0.0; // no cutoff: the off regime becomes a null event
    const SuccessEstimate sat =
        estimate_success(strong, 20000, 9, DecodeModel::exact_q, 2);
    CHECK(sat.phi_a > 0.99);
    CHECK(sat.phi_b > 0.99);
}

TEST_CASE("success estimate agrees with the analytic chain") {
    const SystemConfig cfg;
    const AoiReport an = evaluate_analytic(cfg);
    const SuccessEstimate mc =
        estimate_success(cfg, 400000, 2718, DecodeModel::exact_q, 4);
    CHECK(std::abs(mc.phi_a - an.phi_a) < 4.0 * mc.stderr_a + 0.01);
    // With the linearized decode model the only gap left is the CDF/GCQ error.
    const SuccessEstimate lin =
        estimate_success(cfg, 400000, 2718, DecodeModel::linearized, 4);
    CHECK(std::abs(lin.phi_a - an.phi_a) < 4.0 * lin.stderr_a + 0.002);
}

TEST_CASE("sawtooth time average on forced delivery patterns") {
    const double cycle = 0.012;
    std::vector<std::uint8_t> all(10000, 1);
    CHECK(sawtooth_time_average(all, cycle) ==
          doctest::Approx(1.5 * cycle).epsilon(1e-9));

    std::vector<std::uint8_t> alternating(10000);
    for (std::size_t i = 0; i < alternating.size(); ++i) {
        alternating[i] = i % 2 == 1; // miss, hit, miss, hit, ...
    }
    // Deterministic period-2 deliveries: ramps T->2T and 2T->3T, average 2T.
    CHECK(sawtooth_time_average(alternating, cycle) ==
          doctest::Approx(2.0 * cycle).epsilon(1e-6));

    std::vector<std::uint8_t> never(1000, 0);
    // Age ramps from T to (N+1)T with no reset: average (N/2 + 1)T.
    CHECK(sawtooth_time_average(never, cycle) ==
          doctest::Approx((500.0 + 1.0) * cycle).epsilon(1e-9));
}

TEST_CASE("simulated age obeys the geometric renewal identity") {
    const SystemConfig cfg;
    const double cycle = slot_durations(cfg).total();
    const AgeTrace tr = simulate_aoi(cfg, 300000, 31415, DecodeModel::exact_q, 4);
    const double predicted = 0.5 * cycle + cycle / tr.success_rate_a;
    CHECK(std::abs(tr.time_avg_age_a - predicted) <
          3.0 * tr.stderr_age_a + 1e-5);
    CHECK(tr.stderr_age_a > 0.0);
    CHECK(tr.stderr_age_a < 1e-3);
}

TEST_CASE("interdeparture moments: deterministic and geometric cases") {
    SystemConfig strong;
    strong.p_a = 50.0;
    strong.p_b = 50.0;
    strong.p_min = 0.0;
    const double cycle = slot_durations(strong).total();
    const InterdepartureMoments det =
        moment_check_interdeparture(strong, SourceId::A, 20000, 1);
    CHECK(det.mean_s == doctest::Approx(cycle).epsilon(1e-3));
    CHECK(det.second_s2 == doctest::Approx(cycle * cycle).epsilon(2e-3));

    const SystemConfig cfg;
    const AoiReport an = evaluate_analytic(cfg);
    const InterdepartureMoments geo =
        moment_check_interdeparture(cfg, SourceId::A, 300000, 2);
    const double phi = an.phi_a;
    CHECK(geo.mean_s == doctest::Approx(cycle / phi).epsilon(0.02));
    CHECK(geo.second_s2 ==
          doctest::Approx(cycle * cycle * (2.0 - phi) / (phi * phi)).epsilon(0.05));

    SystemConfig dead;
    dead.rho = 1.0;
    CHECK_THROWS_AS(moment_check_interdeparture(dead, SourceId::A, 5000, 3),
                    std::runtime_error);
}

TEST_CASE("empirical downlink SNR CDF tracks the analytic one") {
    const SystemConfig cfg;
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.025 * i);
    const std::uint64_t trials = 200000;
    const std::vector<double> emp =
        oracle_cdf_dest_snr(cfg, SourceId::A, grid, trials, 99, 4);
    REQUIRE(emp.size() == grid.size());
    const double band = std::sqrt(std::log(2.0 / 0.001) / (2.0 * trials));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double an = cdf_dest_snr(grid[i], SourceId::A, cfg, GcqSettings{});
        CHECK(std::abs(emp[i] - an) < band + 5e-4);
    }
    CHECK_THROWS_AS(oracle_cdf_dest_snr(cfg, SourceId::A, grid, 100, 99, 1),
                    std::invalid_argument);
}

TEST_CASE("run_point_mc packages the trace consistently") {
    const SystemConfig cfg;
    const McPointReport p = run_point_mc(cfg, 100000, 6, DecodeModel::exact_q, 2);
    CHECK(p.report.method == Method::monte_carlo);
    CHECK(p.report.aaoi_a == p.trace.time_avg_age_a);
    CHECK(p.report.aaoi_b == p.trace.time_avg_age_b);
    CHECK(p.report.phi_a == p.trace.success_rate_a);
    CHECK(p.report.weighted_sum ==
          doctest::Approx(cfg.w_a * p.report.aaoi_a + cfg.w_b * p.report.aaoi_b)
              .epsilon(1e-12));
    CHECK(p.report.ci_radius > 0.0);
    // Error fractions multiply out near the success rate (independence holds
    // per cycle by construction).
    CHECK((1.0 - p.report.eps_relay_b) * (1.0 - p.report.eps_dest_a) ==
          doctest::Approx(p.report.phi_a).epsilon(0.02));
}
