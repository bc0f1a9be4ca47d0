#include "swiptaoi/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "swiptaoi/channel.hpp"
#include "swiptaoi/energy.hpp"

namespace swiptaoi {

namespace {

struct Field {
    const char* name;
    std::function<double(const SystemConfig&)> get;
    std::function<void(SystemConfig&, double)> set;
    bool integral;
};

const std::vector<Field>& fields() {
    auto d = [](double SystemConfig::* m) {
        return Field{nullptr,
                     [m](const SystemConfig& c) { return c.*m; },
                     [m](SystemConfig& c, double v) { c.*m = v; }, false};
    };
    auto i = [](int SystemConfig::* m) {
        return Field{nullptr,
                     [m](const SystemConfig& c) { return static_cast<double>(c.*m); },
                     [m](SystemConfig& c, double v) { c.*m = static_cast<int>(v); }, true};
    };
    static const std::vector<Field> table = [&] {
        std::vector<Field> t;
        auto add = [&t](const char* name, Field f) {
            f.name = name;
            t.push_back(std::move(f));
        };
        add("p_a", d(&SystemConfig::p_a));
        add("p_b", d(&SystemConfig::p_b));
        add("d_ar", d(&SystemConfig::d_ar));
        add("d_br", d(&SystemConfig::d_br));
        add("carrier_hz", d(&SystemConfig::carrier_hz));
        add("t_s", d(&SystemConfig::t_s));
        add("n_ar", i(&SystemConfig::n_ar));
        add("n_br", i(&SystemConfig::n_br));
        add("n_ra", i(&SystemConfig::n_ra));
        add("n_rb", i(&SystemConfig::n_rb));
        add("k_ar", i(&SystemConfig::k_ar));
        add("k_br", i(&SystemConfig::k_br));
        add("k_ra", i(&SystemConfig::k_ra));
        add("k_rb", i(&SystemConfig::k_rb));
        add("noise_r", d(&SystemConfig::noise_r));
        add("noise_a", d(&SystemConfig::noise_a));
        add("noise_b", d(&SystemConfig::noise_b));
        add("rho", d(&SystemConfig::rho));
        add("eta", d(&SystemConfig::eta));
        add("e_max", d(&SystemConfig::e_max));
        add("p_min", d(&SystemConfig::p_min));
        add("w_a", d(&SystemConfig::w_a));
        add("w_b", d(&SystemConfig::w_b));
        add("gcq_v", i(&SystemConfig::gcq_v));
        add("gcq_m", i(&SystemConfig::gcq_m));
        return t;
    }();
    return table;
}

const Field* find_field(const std::string& key) {
    for (const auto& f : fields()) {
        if (key == f.name) return &f;
    }
    return nullptr;
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

void set_value(SystemConfig& cfg, const std::string& key, double value) {
    const Field* f = find_field(key);
    if (f == nullptr) fail(key, "unknown key");
    if (f->integral && (value != std::floor(value) || std::abs(value) > 1e9)) {
        fail(key, "must be an integer");
    }
    f->set(cfg, value);
}

void require(bool ok, const char* key, const char* what) {
    if (!ok) fail(key, what);
}

} // namespace

void validate_config(const SystemConfig& cfg) {
    require(cfg.p_a > 0, "p_a", "must be > 0");
    require(cfg.p_b > 0, "p_b", "must be > 0");
    require(cfg.d_ar > 0, "d_ar", "must be > 0");
    require(cfg.d_br > 0, "d_br", "must be > 0");
    require(cfg.carrier_hz > 0, "carrier_hz", "must be > 0");
    require(cfg.t_s > 0, "t_s", "must be > 0");
    require(cfg.n_ar >= 1, "n_ar", "must be >= 1");
    require(cfg.n_br >= 1, "n_br", "must be >= 1");
    require(cfg.n_ra >= 1, "n_ra", "must be >= 1");
    require(cfg.n_rb >= 1, "n_rb", "must be >= 1");
    require(cfg.k_ar >= 1, "k_ar", "must be >= 1");
    require(cfg.k_br >= 1, "k_br", "must be >= 1");
    require(cfg.k_ra >= 1, "k_ra", "must be >= 1");
    require(cfg.k_rb >= 1, "k_rb", "must be >= 1");
    require(cfg.noise_r > 0, "noise_r", "must be > 0");
    require(cfg.noise_a > 0, "noise_a", "must be > 0");
    require(cfg.noise_b > 0, "noise_b", "must be > 0");
    require(cfg.rho >= 0 && cfg.rho <= 1, "rho", "must be in [0, 1]");
    require(cfg.eta > 0 && cfg.eta <= 1, "eta", "must be in (0, 1]");
    require(cfg.e_max > 0, "e_max", "must be > 0");
    require(cfg.p_min >= 0, "p_min", "must be >= 0");
    require(cfg.w_a >= 0, "w_a", "must be >= 0");
    require(cfg.w_b >= 0, "w_b", "must be >= 0");
    require(cfg.gcq_v >= 1, "gcq_v", "must be >= 1");
    require(cfg.gcq_m >= 1, "gcq_m", "must be >= 1");
    // Free-space model breaks down inside the unit-gain distance.
    require(path_loss_alpha({cfg.d_ar, cfg.carrier_hz}) <= 1.0, "d_ar",
            "inside the unit-gain distance (alpha > 1)");
    require(path_loss_alpha({cfg.d_br, cfg.carrier_hz}) <= 1.0, "d_br",
            "inside the unit-gain distance (alpha > 1)");
    const SlotDurations s = slot_durations(cfg);
    require(cfg.p_min * s.t2 < cfg.e_max, "p_min", "E_min = p_min * t2 must be < e_max");
}

SystemConfig parse_config(std::istream& in, const std::string& origin) {
    SystemConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string rhs = trim(line.substr(eq + 1));
        double value = 0.0;
        std::string trailing;
        std::istringstream vs(rhs);
        if (key.empty() || !(vs >> value) || (vs >> trailing)) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value', got '" + line + "'");
        }
        set_value(cfg, key, value);
    }
    validate_config(cfg);
    return cfg;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_config(in, path);
}

void apply_overrides(SystemConfig& cfg, const std::map<std::string, double>& overrides) {
    for (const auto& [key, value] : overrides) {
        set_value(cfg, key, value);
    }
    validate_config(cfg);
}

void write_config(std::ostream& out, const SystemConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& f : fields()) {
        os << f.name << " = " << f.get(cfg) << "\n";
    }
    out << os.str();
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& f : fields()) keys.emplace_back(f.name);
    return keys;
}

std::string config_to_string(const SystemConfig& cfg) {
    std::ostringstream os;
    write_config(os, cfg);
    return os.str();
}

} // namespace swiptaoi
