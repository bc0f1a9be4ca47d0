#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "swiptaoi/config.hpp"

using namespace swiptaoi;

TEST_CASE("defaults describe the reference scenario") {
    const SystemConfig cfg;
    CHECK(cfg.p_a == 1.0);
    CHECK(cfg.p_b == 1.0);
    CHECK(cfg.d_ar == 30.0);
    CHECK(cfg.d_br == 30.0);
    CHECK(cfg.carrier_hz == 900e6);
    CHECK(cfg.t_s == 20e-6);
    CHECK(cfg.n_ar == 200);
    CHECK(cfg.n_br == 200);
    CHECK(cfg.n_ra == 200);
    CHECK(cfg.n_rb == 200);
    CHECK(cfg.k_ar == 32);
    CHECK(cfg.k_br == 32);
    CHECK(cfg.k_ra == 32);
    CHECK(cfg.k_rb == 32);
    CHECK(cfg.noise_r == 1e-13);
    CHECK(cfg.noise_a == 1e-13);
    CHECK(cfg.noise_b == 1e-13);
    CHECK(cfg.rho == 0.5);
    CHECK(cfg.eta == 0.9);
    CHECK(cfg.e_max == 1e-3);
    CHECK(cfg.p_min == 1e-7);
    CHECK(cfg.w_a == 0.5);
    CHECK(cfg.w_b == 0.5);
    CHECK(cfg.gcq_v == 100);
    CHECK(cfg.gcq_m == 100);
    CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("validate_config rejects out-of-range values") {
    auto bad = [](auto mutate) {
        SystemConfig cfg;
        mutate(cfg);
        return cfg;
    };
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.rho = 1.5; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.rho = -0.1; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.eta = 1.2; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.p_a = -1.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.n_ar = 0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.k_ar = -1; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.noise_r = 0.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.t_s = 0.0; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.w_a = -0.5; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.gcq_v = 0; })),
                    std::invalid_argument);
    // Free-space model breaks down once the gain would exceed unity.
    CHECK_THROWS_AS(validate_config(bad([](auto& c) { c.d_ar = 0.01; })),
                    std::invalid_argument);
    // The cutoff must sit strictly below the cap.
    CHECK_THROWS_AS(validate_config(bad([](auto& c) {
                        c.p_min = 1.0;
                        c.e_max = 1e-6;
                    })),
                    std::invalid_argument);
}

TEST_CASE("parse_config: comments, overrides of defaults, rejection") {
    std::istringstream good("# scenario\n"
                            "p_a = 2.5\n"
                            "\n"
                            "n_ar = 400   # longer uplink block\n"
                            "rho=0.25\n");
    const SystemConfig cfg = parse_config(good, "inline");
    CHECK(cfg.p_a == 2.5);
    CHECK(cfg.n_ar == 400);
    CHECK(cfg.rho == 0.25);
    CHECK(cfg.p_b == 1.0); // untouched keys keep defaults

    std::istringstream unknown("p_c = 1.0\n");
    CHECK_THROWS_AS(parse_config(unknown, "inline"), std::invalid_argument);
    std::istringstream garbage("p_a = fast\n");
    CHECK_THROWS_AS(parse_config(garbage, "inline"), std::invalid_argument);
    std::istringstream trailing("p_a = 1.0 extra\n");
    CHECK_THROWS_AS(parse_config(trailing, "inline"), std::invalid_argument);
    std::istringstream noneq("p_a 1.0\n");
    CHECK_THROWS_AS(parse_config(noneq, "inline"), std::invalid_argument);
    std::istringstream invalid("rho = 1.5\n");
    CHECK_THROWS_AS(parse_config(invalid, "inline"), std::invalid_argument);
    std::istringstream fractional_n("n_ar = 200.5\n");
    CHECK_THROWS_AS(parse_config(fractional_n, "inline"), std::invalid_argument);
}

TEST_CASE("write_config round-trips through parse_config") {
    SystemConfig cfg;
    cfg.p_a = 3.1415926535897932;
    cfg.noise_r = 2.5e-14;
    cfg.n_rb = 640;
    cfg.rho = 0.125;
    cfg.w_a = 0.75;
    cfg.w_b = 0.25;
    std::istringstream in(config_to_string(cfg));
    const SystemConfig back = parse_config(in, "roundtrip");
    CHECK(back.p_a == cfg.p_a);
    CHECK(back.noise_r == cfg.noise_r);
    CHECK(back.n_rb == cfg.n_rb);
    CHECK(back.rho == cfg.rho);
    CHECK(back.w_a == cfg.w_a);
    CHECK(back.w_b == cfg.w_b);
    CHECK(config_to_string(back) == config_to_string(cfg));
}

TEST_CASE("apply_overrides wins over file values and validates") {
    std::istringstream in("p_a = 2.0\nrho = 0.3\n");
    SystemConfig cfg = parse_config(in, "inline");
    apply_overrides(cfg, {{"p_a", 5.0}, {"n_br", 128.0}});
    CHECK(cfg.p_a == 5.0);
    CHECK(cfg.n_br == 128);
    CHECK(cfg.rho == 0.3);
    CHECK_THROWS_AS(apply_overrides(cfg, {{"bogus", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_overrides(cfg, {{"rho", 2.0}}), std::invalid_argument);
}

TEST_CASE("config_keys covers every field exactly once") {
    const auto keys = config_keys();
    CHECK(keys.size() == 25);
    for (const auto& k : keys) {
        const std::size_t count = std::count(keys.begin(), keys.end(), k);
        CHECK(count == 1);
    }
    // Every advertised key round-trips through an override of itself.
    const SystemConfig defaults;
    const std::string before = config_to_string(defaults);
    for (const auto& k : keys) {
        SystemConfig cfg;
        std::istringstream in(before);
        const SystemConfig parsed = parse_config(in, "self");
        CHECK(config_to_string(parsed) == before);
        if (k.starts_with("n_") || k.starts_with("k_") || k.starts_with("gcq_")) {
            apply_overrides(cfg, {{k, 64.0}});
        } else if (k.starts_with("d_")) {
            apply_overrides(cfg, {{k, 25.0}});
        } else if (k == "rho" || k == "eta" || k == "w_a" || k == "w_b") {
            apply_overrides(cfg, {{k, 0.25}});
        } else {
            continue; // dimensional scalars are exercised elsewhere
        }
        CHECK(config_to_string(cfg) != before);
    }
}
