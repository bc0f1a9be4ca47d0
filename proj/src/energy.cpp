#include "swiptaoi/energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace swiptaoi {

SlotDurations slot_durations(const SystemConfig& cfg) {
    if (cfg.t_s <= 0.0) throw std::invalid_argument("slot_durations: t_s must be > 0");
    if (cfg.n_ar < 1 || cfg.n_br < 1 || cfg.n_ra < 1 || cfg.n_rb < 1) {
        throw std::invalid_argument("slot_durations: blocklengths must be >= 1");
    }
    SlotDurations s;
    s.t1 = static_cast<double>(std::max(cfg.n_ar, cfg.n_br)) * cfg.t_s;
    s.t2 = static_cast<double>(cfg.n_ra + cfg.n_rb) * cfg.t_s;
    return s;
}

double harvested_energy(const FadingDraw& draw, const SystemConfig& cfg) {
    const SlotDurations s = slot_durations(cfg);
    const double a_ar = path_loss_alpha({cfg.d_ar, cfg.carrier_hz});
    const double a_br = path_loss_alpha({cfg.d_br, cfg.carrier_hz});
    return cfg.rho * cfg.eta * s.t1 *
           (cfg.p_a * a_ar * draw.g_ar + cfg.p_b * a_br * draw.g_br);
}

EnergyOutcome available_energy(double e_r, const SystemConfig& cfg) {
    if (e_r < 0.0) throw std::invalid_argument("available_energy: e_r must be >= 0");
    const SlotDurations s = slot_durations(cfg);
    const double e_min = cfg.p_min * s.t2;
    EnergyOutcome out;
    out.harvested_j = e_r;
    if (e_r >= cfg.e_max) {
        out.regime = EnergyRegime::capped;
        out.available_j = cfg.e_max;
    } else if (e_r <= e_min) {
        out.regime = EnergyRegime::off;
        out.available_j = 0.0;
    } else {
        out.regime = EnergyRegime::linear;
        out.available_j = e_r;
    }
    out.relay_power_w = out.available_j / s.t2;
    return out;
}

double dest_snr(const FadingDraw& draw, const EnergyOutcome& outcome,
                SourceId dest, const SystemConfig& cfg) {
    if (outcome.regime == EnergyRegime::off) return 0.0;
    const SlotDurations s = slot_durations(cfg);
    const double d = dest == SourceId::A ? cfg.d_ar : cfg.d_br;
    const double g = dest == SourceId::A ? draw.g_ra : draw.g_rb;
    const double sigma2 = dest == SourceId::A ? cfg.noise_a : cfg.noise_b;
    const double alpha = path_loss_alpha({d, cfg.carrier_hz});
    return outcome.available_j * alpha * g / (s.t2 * sigma2);
}

double relay_snr(const FadingDraw& draw, SourceId source, const SystemConfig& cfg) {
    const double d = source == SourceId::A ? cfg.d_ar : cfg.d_br;
    const double g = source == SourceId::A ? draw.g_ar : draw.g_br;
    const double p = source == SourceId::A ? cfg.p_a : cfg.p_b;
    const double alpha = path_loss_alpha({d, cfg.carrier_hz});
    return (1.0 - cfg.rho) * p * alpha * g / cfg.noise_r;
}

} // namespace swiptaoi
