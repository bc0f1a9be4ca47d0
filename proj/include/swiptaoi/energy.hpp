#pragma once

#include "swiptaoi/channel.hpp"
#include "swiptaoi/config.hpp"

namespace swiptaoi {

enum class SourceId { A, B };

struct SlotDurations {
    double t1; // first slot: sources -> relay (harvesting)
    double t2; // second slot: relay -> both sources
    double total() const { return t1 + t2; }
};

/// t1 = max(n_ar, n_br) * t_s (sources transmit simultaneously on orthogonal
/// channels, the slot covers both); t2 = (n_ra + n_rb) * t_s.
SlotDurations slot_durations(const SystemConfig& cfg);

enum class EnergyRegime { capped, linear, off };

struct EnergyOutcome {
    double harvested_j;   // E_R before thresholding
    double available_j;   // after cap / cutoff
    EnergyRegime regime;
    double relay_power_w; // available_j / t2
};

/// E_R = rho eta t1 (P_A a_AR g_AR + P_B a_BR g_BR).
double harvested_energy(const FadingDraw& draw, const SystemConfig& cfg);

/// Threshold model: capped iff E_R >= e_max, off iff E_R <= E_min = p_min t2,
/// linear (available = E_R) in between. The three regimes partition [0, inf).
EnergyOutcome available_energy(double e_r, const SystemConfig& cfg);

/// Downlink SNR at destination `dest`:
/// gamma = available_j * a_R,dest * g_R,dest / (t2 * sigma_dest^2),
/// exactly zero when regime == off.
double dest_snr(const FadingDraw& draw, const EnergyOutcome& outcome,
                SourceId dest, const SystemConfig& cfg);

/// Uplink SNR at the relay for the packet from `source`:
/// gamma = (1 - rho) P a g / sigma_R^2.
double relay_snr(const FadingDraw& draw, SourceId source, const SystemConfig& cfg);

} // namespace swiptaoi
