import math

import pytest

import swiptaoi as sw


def test_path_loss():
    alpha = sw.path_loss_alpha(30.0, 900e6)
    assert alpha == pytest.approx(7.82e-7, rel=1e-3)
    assert sw.path_loss_alpha(60.0, 900e6) == pytest.approx(alpha / 4.0, rel=1e-12)


def test_finite_blocklength_kernel():
    assert sw.capacity(1.0) == pytest.approx(1.0)
    assert sw.q_function(0.0) == 0.5
    psi = 2.0 ** (32.0 / 200.0) - 1.0
    assert sw.eps_conditional(psi, 200, 32) == pytest.approx(0.5, rel=1e-10)
    assert sw.eps_conditional(10.0, 200, 32) < 1e-12


def test_analytic_reference_point():
    cfg = sw.SystemConfig()
    r = sw.evaluate_analytic(cfg)
    assert r.eps_dest_a == pytest.approx(0.15776, rel=1e-3)
    assert r.phi_a == pytest.approx(0.84224, rel=1e-3)
    assert r.weighted_sum == pytest.approx(0.020248, rel=1e-3)
    assert r.phi_a == pytest.approx(r.phi_b, rel=1e-12)


def test_analytic_against_monte_carlo():
    cfg = sw.SystemConfig()
    an = sw.evaluate_analytic(cfg)
    mc = sw.estimate_success(cfg, 200000, 7, sw.DecodeModel.exact_q, 2)
    assert abs(mc.phi_a - an.phi_a) < 4.0 * mc.stderr_a + 0.01


def test_monte_carlo_determinism():
    cfg = sw.SystemConfig()
    a = sw.simulate_aoi(cfg, 20000, 5, sw.DecodeModel.exact_q, 1)
    b = sw.simulate_aoi(cfg, 20000, 5, sw.DecodeModel.exact_q, 3)
    assert a.time_avg_age_a == b.time_avg_age_a
    assert a.success_rate_b == b.success_rate_b


def test_cdf_shape():
    cfg = sw.SystemConfig()
    g = sw.GcqSettings()
    values = [sw.cdf_dest_snr(0.01 * i, sw.SourceId.A, cfg, g) for i in range(200)]
    assert all(0.0 <= v <= 1.0 for v in values)
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_config_validation():
    cfg = sw.SystemConfig()
    cfg.rho = 1.5
    with pytest.raises(ValueError):
        sw.validate_config(cfg)


def test_unbounded_age_sentinel():
    assert math.isinf(sw.aaoi(0.012, 0.0))
    assert sw.aaoi(0.012, 1.0) == pytest.approx(0.018)
