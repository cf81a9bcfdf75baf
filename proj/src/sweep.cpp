#include "coopnet/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "coopnet/baseline.hpp"
#include "coopnet/simulator.hpp"

namespace coopnet {

const char* const kSweepCsvHeader =
    "sweep_value,B_nc_max,W_opt,feasible,Wp,TpF,TpR,mu_s,B_pc,mu_s_hat,B_pc_hat,seed";

SweepRow evaluate_point(const SystemParams& params, const OptimizerConfig& ocfg,
                        const SimSpec& sim, double sweep_value) {
    SweepRow row;
    row.sweep_value = sweep_value;
    row.seed = sim.seed;
    row.mu_s_hat = std::nan("");
    row.B_pc_hat = std::nan("");

    const BaselineReport base = noncoop_optimize(params);
    row.B_nc_max = base.feasible ? base.B_max : 0.0;
    row.W_opt = base.W_opt;

    const OptimumReport opt = optimize(params, ocfg);
    row.feasible = opt.feasible;
    if (opt.feasible) {
        row.Wp = opt.alloc.Wp;
        row.TpF = opt.alloc.TpF;
        row.TpR = opt.alloc.TpR;
        row.mu_s = opt.mu_s;
        row.B_pc = opt.report.B_pc;
        if (sim.slots > 0) {
            SimOptions so;
            so.warmup = sim.warmup;
            so.force_decode = sim.force_decode;
            const SimStats st = run(params, opt.alloc, sim.slots, sim.seed, so);
            row.mu_s_hat = st.mu_s_hat;
            row.B_pc_hat = st.B_pc_hat;
        }
    }
    return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
    std::vector<SweepRow> rows;
    if (cfg.sweep.variable.empty()) {
        rows.push_back(evaluate_point(cfg.params, cfg.optimizer, cfg.sim,
                                      cfg.params.lambda_p));
        return rows;
    }
    const double step = cfg.sweep.step > 0 ? cfg.sweep.step : 1.0;
    // Half-step slack keeps the endpoint included despite accumulation error.
    for (double v = cfg.sweep.from; v <= cfg.sweep.to + step * 0.5; v += step) {
        SystemParams p = cfg.params;
        apply_sweep_value(p, cfg.sweep.variable, v);
        rows.push_back(evaluate_point(p, cfg.optimizer, cfg.sim, v));
    }
    return rows;
}

namespace {
void append_num(std::string& s, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    s += buf;
}
}  // namespace

std::string format_row(const SweepRow& r) {
    std::string s;
    append_num(s, r.sweep_value); s += ',';
    append_num(s, r.B_nc_max); s += ',';
    append_num(s, r.W_opt); s += ',';
    s += r.feasible ? '1' : '0'; s += ',';
    append_num(s, r.Wp); s += ',';
    append_num(s, r.TpF); s += ',';
    append_num(s, r.TpR); s += ',';
    append_num(s, r.mu_s); s += ',';
    append_num(s, r.B_pc); s += ',';
    append_num(s, r.mu_s_hat); s += ',';
    append_num(s, r.B_pc_hat); s += ',';
    s += std::to_string(r.seed);
    return s;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows) os << format_row(r) << '\n';
}

}  // namespace coopnet
