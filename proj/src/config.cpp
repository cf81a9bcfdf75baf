#include "coopnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace coopnet {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ParseError(line, "expected a number, got '" + v + "'");
    return x;
}

std::uint64_t parse_u64(const std::string& v, int line) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ParseError(line, "expected a nonnegative integer, got '" + v + "'");
    return x;
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParseError(line, "expected a boolean, got '" + v + "'");
}

// Comma-separated gain list, reduced to the best antenna.
double parse_gain_list_max(const std::string& v, int line) {
    std::stringstream ss(v);
    std::string item;
    double best = -1.0;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError(line, "empty entry in gain list");
        best = std::max(best, parse_double(item, line));
    }
    if (best < 0.0) throw ParseError(line, "empty gain list");
    return best;
}

}  // namespace

void apply_sweep_value(SystemParams& p, const std::string& var, double value) {
    if (var == "lambda_p") p.lambda_p = value;
    else if (var == "lambda_s") p.lambda_s = value;
    else if (var == "M") p.M = static_cast<int>(value);
    else if (var == "Ps") p.Ps = value;
    else if (var == "Pp") p.Pp = value;
    else if (var == "sigma_s_sd") p.sigma_s_sd = value;
    else if (var == "sigma_s_pd") p.sigma_s_pd = value;
    else if (var == "sigma_p_pd") p.sigma_p_pd = value;
    else if (var == "sigma_p_s") p.sigma_p_s = value;
    else if (var == "tau") p.tau = value;
    else if (var == "Q_target") p.Q_target = value;
    else throw ValidationError("unknown sweep variable '" + var + "'");
    auto res = validate(p);
    if (!res.ok()) {
        std::string msg = "sweep value violates: ";
        for (const auto& v : res.violations) msg += v + "; ";
        throw ValidationError(msg);
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    // tau defaults to 0.2*T; track whether either was set explicitly so an
    // overridden T still gives a consistent default.
    bool tau_set = false, T_set = false;

    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError(line, "missing key");
        if (val.empty()) throw ParseError(line, "missing value for '" + key + "'");

        auto& p = cfg.params;
        if (key == "b") p.b = parse_double(val, line);
        else if (key == "W") p.W = parse_double(val, line);
        else if (key == "T") { p.T = parse_double(val, line); T_set = true; }
        else if (key == "tau") { p.tau = parse_double(val, line); tau_set = true; }
        else if (key == "N0") p.N0 = parse_double(val, line);
        else if (key == "Pp") p.Pp = parse_double(val, line);
        else if (key == "Ps") p.Ps = parse_double(val, line);
        else if (key == "M") p.M = static_cast<int>(parse_u64(val, line));
        else if (key == "Q_target") p.Q_target = parse_double(val, line);
        else if (key == "sigma_p_pd") p.sigma_p_pd = parse_double(val, line);
        else if (key == "sigma_s_sd") p.sigma_s_sd = parse_double(val, line);
        else if (key == "sigma_s_pd") p.sigma_s_pd = parse_double(val, line);
        else if (key == "sigma_p_s") p.sigma_p_s = parse_double(val, line);
        else if (key == "sigma_s_sd_list") p.sigma_s_sd = parse_gain_list_max(val, line);
        else if (key == "sigma_s_pd_list") p.sigma_s_pd = parse_gain_list_max(val, line);
        else if (key == "lambda_p") p.lambda_p = parse_double(val, line);
        else if (key == "lambda_s") p.lambda_s = parse_double(val, line);
        else if (key == "grid_wp") cfg.optimizer.grid_wp = static_cast<int>(parse_u64(val, line));
        else if (key == "grid_tpf") cfg.optimizer.grid_tpf = static_cast<int>(parse_u64(val, line));
        else if (key == "grid_tpr") cfg.optimizer.grid_tpr = static_cast<int>(parse_u64(val, line));
        else if (key == "strictness_eps") cfg.optimizer.strictness_eps = parse_double(val, line);
        else if (key == "sweep_var") cfg.sweep.variable = val;
        else if (key == "sweep_from") cfg.sweep.from = parse_double(val, line);
        else if (key == "sweep_to") cfg.sweep.to = parse_double(val, line);
        else if (key == "sweep_step") cfg.sweep.step = parse_double(val, line);
        else if (key == "slots") cfg.sim.slots = parse_u64(val, line);
        else if (key == "seed") cfg.sim.seed = parse_u64(val, line);
        else if (key == "warmup") cfg.sim.warmup = parse_u64(val, line);
        else if (key == "force_decode") cfg.sim.force_decode = parse_bool(val, line);
        else if (key == "output") cfg.output = val;
        else throw ParseError(line, "unknown key '" + key + "'");
    }
    if (T_set && !tau_set) cfg.params.tau = 0.2 * cfg.params.T;

    auto res = validate(cfg.params);
    if (!res.ok()) {
        std::string msg = "invalid parameters: ";
        for (const auto& v : res.violations) msg += v + "; ";
        throw ValidationError(msg);
    }
    if (cfg.optimizer.grid_wp < 2 || cfg.optimizer.grid_tpf < 2 || cfg.optimizer.grid_tpr < 2)
        throw ValidationError("grid counts must be >= 2");
    if (cfg.optimizer.strictness_eps < 0)
        throw ValidationError("strictness_eps must be >= 0");
    if (!cfg.sweep.variable.empty() && cfg.sweep.step <= 0 && cfg.sweep.from != cfg.sweep.to)
        throw ValidationError("sweep_step must be > 0");
    return cfg;
}

}  // namespace coopnet
