"""Average AoI of a two-way SWIPT decode-and-forward relay under
finite-blocklength coding: analytic chain plus Monte Carlo oracle."""

from swiptaoi._core import (  # noqa: F401
    AgeTrace,
    AoiReport,
    DecodeModel,
    GcqSettings,
    Method,
    SourceId,
    SuccessEstimate,
    SystemConfig,
    aaoi,
    capacity,
    cdf_dest_snr,
    dispersion,
    eps_conditional,
    eps_dest_gcq,
    eps_relay_closed_form,
    estimate_success,
    evaluate_analytic,
    evaluate_exact,
    load_config,
    oracle_cdf_dest_snr,
    path_loss_alpha,
    q_function,
    simulate_aoi,
    success_probability,
    validate_config,
    weighted_sum_aaoi,
)
