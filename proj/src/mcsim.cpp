#include "swiptaoi/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "swiptaoi/fbl.hpp"

namespace swiptaoi {

namespace {

struct DecodeContext {
    LinkCode code;
    LinearizationCoeffs lin;

    double error_prob(double gamma, DecodeModel model) const {
        if (model == DecodeModel::exact_q) return eps_conditional(gamma, code);
        return theta(gamma, lin, code.n);
    }
};

/// Everything derivable from the config, computed once per bulk run.
struct Scenario {
    SystemConfig cfg;
    SlotDurations slots;
    double alpha_ar, alpha_br;
    double e_min;
    DecodeContext up_a, up_b, down_a, down_b;

    explicit Scenario(const SystemConfig& c) : cfg(c), slots(slot_durations(c)) {
        alpha_ar = path_loss_alpha({c.d_ar, c.carrier_hz});
        alpha_br = path_loss_alpha({c.d_br, c.carrier_hz});
        e_min = c.p_min * slots.t2;
        up_a = {{c.n_ar, c.k_ar}, linearization({c.n_ar, c.k_ar})};
        up_b = {{c.n_br, c.k_br}, linearization({c.n_br, c.k_br})};
        down_a = {{c.n_ra, c.k_ra}, linearization({c.n_ra, c.k_ra})};
        down_b = {{c.n_rb, c.k_rb}, linearization({c.n_rb, c.k_rb})};
    }
};

struct TrialDecodes {
    bool dec_ar, dec_br, dec_ra, dec_rb;
};

TrialOutcome run_trial_impl(TrialRng& rng, const Scenario& sc, DecodeModel model,
                            TrialDecodes* decodes = nullptr) {
    const SystemConfig& cfg = sc.cfg;
    TrialOutcome out;
    out.draw = sample_fading(rng);

    const double harvested = cfg.rho * cfg.eta * sc.slots.t1 *
                             (cfg.p_a * sc.alpha_ar * out.draw.g_ar +
                              cfg.p_b * sc.alpha_br * out.draw.g_br);
    EnergyOutcome& e = out.energy;
    e.harvested_j = harvested;
    if (harvested >= cfg.e_max) {
        e.regime = EnergyRegime::capped;
        e.available_j = cfg.e_max;
    } else if (harvested <= sc.e_min) {
        e.regime = EnergyRegime::off;
        e.available_j = 0.0;
    } else {
        e.regime = EnergyRegime::linear;
        e.available_j = harvested;
    }
    e.relay_power_w = e.available_j / sc.slots.t2;

    const double inv_t2 = 1.0 / sc.slots.t2;
    out.gamma_relay_a = (1.0 - cfg.rho) * cfg.p_a * sc.alpha_ar * out.draw.g_ar / cfg.noise_r;
    out.gamma_relay_b = (1.0 - cfg.rho) * cfg.p_b * sc.alpha_br * out.draw.g_br / cfg.noise_r;
    out.gamma_dest_a = e.available_j * sc.alpha_ar * out.draw.g_ra * inv_t2 / cfg.noise_a;
    out.gamma_dest_b = e.available_j * sc.alpha_br * out.draw.g_rb * inv_t2 / cfg.noise_b;

    // Decode Bernoullis, fixed draw order: AR, BR, RA, RB.
    const bool dec_ar = rng.uniform() >= sc.up_a.error_prob(out.gamma_relay_a, model);
    const bool dec_br = rng.uniform() >= sc.up_b.error_prob(out.gamma_relay_b, model);
    const bool dec_ra = rng.uniform() >= sc.down_a.error_prob(out.gamma_dest_a, model);
    const bool dec_rb = rng.uniform() >= sc.down_b.error_prob(out.gamma_dest_b, model);

    const bool powered = e.regime != EnergyRegime::off;
    out.delivered_a = dec_br && dec_ra && powered; // B -> R -> A
    out.delivered_b = dec_ar && dec_rb && powered;
    if (decodes != nullptr) *decodes = {dec_ar, dec_br, dec_ra, dec_rb};
    return out;
}

struct BulkCounters {
    std::uint64_t delivered_a = 0;
    std::uint64_t delivered_b = 0;
    std::uint64_t fail_up_a = 0;   // A's uplink packet lost at the relay
    std::uint64_t fail_up_b = 0;
    std::uint64_t fail_down_a = 0; // downlink packet lost at A
    std::uint64_t fail_down_b = 0;

    void add(const BulkCounters& o) {
        delivered_a += o.delivered_a;
        delivered_b += o.delivered_b;
        fail_up_a += o.fail_up_a;
        fail_up_b += o.fail_up_b;
        fail_down_a += o.fail_down_a;
        fail_down_b += o.fail_down_b;
    }
};

struct BulkResult {
    BulkCounters counters;
    std::vector<std::uint8_t> delivered_a; // per cycle, only when flags requested
    std::vector<std::uint8_t> delivered_b;
    std::vector<double> gamma_dest;        // only when gammas requested
};

struct BulkOptions {
    bool keep_flags = false;
    SourceId gamma_dest_of = SourceId::A;
    bool keep_gammas = false;
};

/// Runs `count` trials. Trial t always uses stream t derived from the master
/// seed, so the outcome is bit-identical at any worker count.
BulkResult run_bulk(const SystemConfig& cfg, std::uint64_t count, std::uint64_t seed,
                    DecodeModel model, int workers, const BulkOptions& opt) {
    if (count < 1) throw std::invalid_argument("trial count must be >= 1");
    validate_config(cfg);
    const Scenario sc(cfg);

    BulkResult result;
    if (opt.keep_flags) {
        result.delivered_a.resize(count);
        result.delivered_b.resize(count);
    }
    if (opt.keep_gammas) result.gamma_dest.resize(count);

    workers = std::max(1, workers);
    const std::uint64_t n_workers = std::min<std::uint64_t>(workers, count);
    std::vector<BulkCounters> partial(n_workers);

    auto work = [&](std::uint64_t w) {
        const std::uint64_t lo = count * w / n_workers;
        const std::uint64_t hi = count * (w + 1) / n_workers;
        BulkCounters local;
        for (std::uint64_t t = lo; t < hi; ++t) {
            TrialRng rng(seed, t);
            TrialDecodes dec{};
            const TrialOutcome o = run_trial_impl(rng, sc, model, &dec);
            local.delivered_a += o.delivered_a;
            local.delivered_b += o.delivered_b;
            local.fail_up_a += !dec.dec_ar;
            local.fail_up_b += !dec.dec_br;
            local.fail_down_a += !dec.dec_ra;
            local.fail_down_b += !dec.dec_rb;
            if (opt.keep_flags) {
                result.delivered_a[t] = o.delivered_a;
                result.delivered_b[t] = o.delivered_b;
            }
            if (opt.keep_gammas) {
                result.gamma_dest[t] = opt.gamma_dest_of == SourceId::A ? o.gamma_dest_a
                                                                        : o.gamma_dest_b;
            }
        }
        partial[w] = local;
    };

    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (std::uint64_t w = 0; w < n_workers; ++w) threads.emplace_back(work, w);
        for (auto& th : threads) th.join();
    }
    for (const auto& p : partial) result.counters.add(p);
    return result;
}

} // namespace

TrialOutcome run_trial(TrialRng& rng, const SystemConfig& cfg, DecodeModel model) {
    validate_config(cfg);
    return run_trial_impl(rng, Scenario(cfg), model);
}

SuccessEstimate estimate_success(const SystemConfig& cfg, std::uint64_t trials,
                                 std::uint64_t seed, DecodeModel model, int workers) {
    const BulkResult r = run_bulk(cfg, trials, seed, model, workers, {});
    SuccessEstimate est;
    est.trials = trials;
    est.phi_a = static_cast<double>(r.counters.delivered_a) / trials;
    est.phi_b = static_cast<double>(r.counters.delivered_b) / trials;
    est.stderr_a = std::sqrt(est.phi_a * (1.0 - est.phi_a) / trials);
    est.stderr_b = std::sqrt(est.phi_b * (1.0 - est.phi_b) / trials);
    return est;
}

namespace {

struct SawtoothStats {
    double time_avg_age;
    double success_rate;
    double stderr_age;
};

/// Exact sawtooth over the delivered flags. Age starts at T, grows by T per
/// cycle, resets to T at the end of a delivered cycle. The first warm-up
/// cycles are excluded from the averages.
SawtoothStats sawtooth(const std::vector<std::uint8_t>& delivered, double cycle_s,
                       std::uint64_t warmup) {
    const std::uint64_t n = delivered.size();
    const std::uint64_t counted = n - warmup;
    double age = cycle_s; // Delta(0) = T
    for (std::uint64_t j = 0; j < warmup; ++j) {
        age = delivered[j] ? cycle_s : age + cycle_s;
    }

    // Batch means for the standard error; batch sums accumulate in cycle
    // order so the result does not depend on the worker count upstream.
    const std::uint64_t n_batches = std::min<std::uint64_t>(counted, 100);
    std::vector<double> batch_avg(n_batches);
    double total_area = 0.0;
    std::uint64_t deliveries = 0;
    std::uint64_t pos = 0;
    for (std::uint64_t b = 0; b < n_batches; ++b) {
        const std::uint64_t len = counted / n_batches + (b < counted % n_batches ? 1 : 0);
        double area = 0.0;
        for (std::uint64_t j = 0; j < len; ++j, ++pos) {
            // Age rises linearly from `age` to `age + T` within the cycle.
            area += cycle_s * (age + 0.5 * cycle_s);
            const bool ok = delivered[warmup + pos];
            deliveries += ok;
            age = ok ? cycle_s : age + cycle_s;
        }
        batch_avg[b] = area / (static_cast<double>(len) * cycle_s);
        total_area += area;
    }

    SawtoothStats s;
    s.time_avg_age = total_area / (static_cast<double>(counted) * cycle_s);
    s.success_rate = static_cast<double>(deliveries) / counted;
    double var = 0.0;
    for (double b : batch_avg) {
        const double d = b - s.time_avg_age;
        var += d * d;
    }
    var /= n_batches > 1 ? (n_batches - 1.0) : 1.0;
    s.stderr_age = std::sqrt(var / n_batches);
    return s;
}

} // namespace

double sawtooth_time_average(std::span<const std::uint8_t> delivered,
                             double cycle_s, std::uint64_t warmup) {
    if (delivered.size() <= warmup) {
        throw std::invalid_argument("sawtooth_time_average: warmup covers all cycles");
    }
    const std::vector<std::uint8_t> flags(delivered.begin(), delivered.end());
    return sawtooth(flags, cycle_s, warmup).time_avg_age;
}

AgeTrace simulate_aoi(const SystemConfig& cfg, std::uint64_t cycles,
                      std::uint64_t seed, DecodeModel model, int workers) {
    BulkOptions opt;
    opt.keep_flags = true;
    const BulkResult r = run_bulk(cfg, cycles, seed, model, workers, opt);
    const double cycle_s = slot_durations(cfg).total();
    const std::uint64_t warmup = cycles / 100;

    const SawtoothStats a = sawtooth(r.delivered_a, cycle_s, warmup);
    const SawtoothStats b = sawtooth(r.delivered_b, cycle_s, warmup);
    AgeTrace trace;
    trace.cycle_count = cycles;
    trace.time_avg_age_a = a.time_avg_age;
    trace.time_avg_age_b = b.time_avg_age;
    trace.success_rate_a = a.success_rate;
    trace.success_rate_b = b.success_rate;
    trace.stderr_age_a = a.stderr_age;
    trace.stderr_age_b = b.stderr_age;
    return trace;
}

std::vector<double> oracle_cdf_dest_snr(const SystemConfig& cfg, SourceId dest,
                                        std::span<const double> z_grid,
                                        std::uint64_t trials, std::uint64_t seed,
                                        int workers) {
    if (trials < 10000) {
        throw std::invalid_argument("oracle_cdf_dest_snr: need at least 1e4 trials");
    }
    BulkOptions opt;
    opt.keep_gammas = true;
    opt.gamma_dest_of = dest;
    BulkResult r = run_bulk(cfg, trials, seed, DecodeModel::exact_q, workers, opt);
    std::sort(r.gamma_dest.begin(), r.gamma_dest.end());
    std::vector<double> cdf(z_grid.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const auto it = std::upper_bound(r.gamma_dest.begin(), r.gamma_dest.end(), z_grid[i]);
        cdf[i] = static_cast<double>(it - r.gamma_dest.begin()) / trials;
    }
    return cdf;
}

InterdepartureMoments moment_check_interdeparture(const SystemConfig& cfg,
                                                  SourceId dest,
                                                  std::uint64_t cycles,
                                                  std::uint64_t seed,
                                                  DecodeModel model, int workers) {
    BulkOptions opt;
    opt.keep_flags = true;
    const BulkResult r = run_bulk(cfg, cycles, seed, model, workers, opt);
    const auto& delivered = dest == SourceId::A ? r.delivered_a : r.delivered_b;
    const double cycle_s = slot_durations(cfg).total();

    std::uint64_t deliveries = 0;
    std::uint64_t last = 0;
    bool seen_first = false;
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t gaps = 0;
    for (std::uint64_t j = 0; j < delivered.size(); ++j) {
        if (!delivered[j]) continue;
        ++deliveries;
        if (seen_first) {
            const double x = static_cast<double>(j - last) * cycle_s;
            sum += x;
            sum_sq += x * x;
            ++gaps;
        }
        seen_first = true;
        last = j;
    }
    if (deliveries < 100) {
        throw std::runtime_error("moment_check_interdeparture: only " +
                                 std::to_string(deliveries) +
                                 " deliveries observed (need >= 100)");
    }
    InterdepartureMoments m;
    m.deliveries = deliveries;
    m.mean_s = sum / gaps;
    m.second_s2 = sum_sq / gaps;
    return m;
}

McPointReport run_point_mc(const SystemConfig& cfg, std::uint64_t cycles,
                           std::uint64_t seed, DecodeModel model, int workers) {
    BulkOptions opt;
    opt.keep_flags = true;
    const BulkResult r = run_bulk(cfg, cycles, seed, model, workers, opt);
    const double cycle_s = slot_durations(cfg).total();
    const std::uint64_t warmup = cycles / 100;
    const SawtoothStats a = sawtooth(r.delivered_a, cycle_s, warmup);
    const SawtoothStats b = sawtooth(r.delivered_b, cycle_s, warmup);

    McPointReport out;
    out.trace = {cycles, a.time_avg_age, b.time_avg_age,
                 a.success_rate, b.success_rate, a.stderr_age, b.stderr_age};

    AoiReport& rep = out.report;
    const double n = static_cast<double>(cycles);
    rep.eps_relay_a = static_cast<double>(r.counters.fail_up_a) / n;
    rep.eps_relay_b = static_cast<double>(r.counters.fail_up_b) / n;
    rep.eps_dest_a = static_cast<double>(r.counters.fail_down_a) / n;
    rep.eps_dest_b = static_cast<double>(r.counters.fail_down_b) / n;
    rep.phi_a = a.success_rate;
    rep.phi_b = b.success_rate;
    rep.aaoi_a = a.time_avg_age;
    rep.aaoi_b = b.time_avg_age;
    rep.weighted_sum = weighted_sum_aaoi(rep.aaoi_a, rep.aaoi_b, cfg.w_a, cfg.w_b);
    rep.method = Method::monte_carlo;
    rep.ci_radius = std::sqrt(cfg.w_a * cfg.w_a * a.stderr_age * a.stderr_age +
                              cfg.w_b * cfg.w_b * b.stderr_age * b.stderr_age);
    return out;
}

} // namespace swiptaoi
