// Command-line front end: baseline / optimize / simulate / sweep.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "coopnet/baseline.hpp"
#include "coopnet/config.hpp"
#include "coopnet/optimizer.hpp"
#include "coopnet/simulator.hpp"
#include "coopnet/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

struct Options {
    std::string config_path;
    std::string output_path;
    bool seed_set = false;
    std::uint64_t seed = 0;
    int grid = 0;
    std::uint64_t slots = 0;
};

coopnet::RunConfig load_config(const Options& opt) {
    std::string text;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw std::ios_base::failure("cannot open config: " + opt.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    coopnet::RunConfig cfg = coopnet::parse_config(text);
    if (opt.seed_set) cfg.sim.seed = opt.seed;
    if (opt.grid > 0) {
        cfg.optimizer.grid_wp = opt.grid;
        cfg.optimizer.grid_tpf = opt.grid;
        cfg.optimizer.grid_tpr = opt.grid;
    }
    if (opt.slots > 0) cfg.sim.slots = opt.slots;
    if (!opt.output_path.empty()) cfg.output = opt.output_path;
    return cfg;
}

std::ostream& open_output(const coopnet::RunConfig& cfg, std::ofstream& file) {
    if (cfg.output.empty()) return std::cout;
    file.open(cfg.output);
    if (!file) throw std::ios_base::failure("cannot open output: " + cfg.output);
    return file;
}

int cmd_baseline(const coopnet::RunConfig& cfg) {
    std::ofstream file;
    auto& os = open_output(cfg, file);
    const auto r = coopnet::noncoop_optimize(cfg.params);
    os << "feasible = " << (r.feasible ? "true" : "false") << '\n'
       << "mu_p_max = " << fmt(r.mu_p_max) << '\n'
       << "W_opt = " << fmt(r.W_opt) << '\n'
       << "mu_p_nc = " << fmt(r.mu_p_nc) << '\n'
       << "B_max = " << fmt(r.B_max) << '\n';
    return kExitOk;
}

int cmd_optimize(const coopnet::RunConfig& cfg) {
    std::ofstream file;
    auto& os = open_output(cfg, file);
    const auto r = coopnet::optimize(cfg.params, cfg.optimizer);
    os << "feasible = " << (r.feasible ? "true" : "false") << '\n';
    if (r.extended_baseline) os << "baseline = extended\n";
    if (r.feasible) {
        os << "Wp = " << fmt(r.alloc.Wp) << '\n'
           << "TpF = " << fmt(r.alloc.TpF) << '\n'
           << "TpR = " << fmt(r.alloc.TpR) << '\n'
           << "mu_s = " << fmt(r.mu_s) << '\n'
           << "B_pc = " << fmt(r.report.B_pc) << '\n'
           << "B_nc_ref = " << fmt(r.baseline_B) << '\n'
           << "eta = " << fmt(r.report.chain.eta) << '\n'
           << "pi0 = " << fmt(r.report.chain.pi0) << '\n';
    }
    return kExitOk;
}

int cmd_simulate(const coopnet::RunConfig& cfg) {
    std::ofstream file;
    auto& os = open_output(cfg, file);
    const auto opt = coopnet::optimize(cfg.params, cfg.optimizer);
    if (!opt.feasible) {
        os << "feasible = false\n";
        return kExitOk;
    }
    coopnet::SimOptions so;
    so.warmup = cfg.sim.warmup;
    so.force_decode = cfg.sim.force_decode;
    const std::uint64_t slots = cfg.sim.slots > 0 ? cfg.sim.slots : 1000000;
    const auto st = coopnet::run(cfg.params, opt.alloc, slots, cfg.sim.seed, so);
    os << "slots = " << st.slots << '\n'
       << "seed = " << st.rng_seed << '\n'
       << "Wp = " << fmt(opt.alloc.Wp) << '\n'
       << "TpF = " << fmt(opt.alloc.TpF) << '\n'
       << "TpR = " << fmt(opt.alloc.TpR) << '\n'
       << "pi0_hat = " << fmt(st.pi0_hat) << '\n'
       << "sum_pi_hat = " << fmt(st.sum_pi_hat) << '\n'
       << "sum_eps_hat = " << fmt(st.sum_eps_hat) << '\n'
       << "mu_s_hat = " << fmt(st.mu_s_hat) << '\n'
       << "mu_p_hat = " << fmt(st.mu_p_hat) << '\n'
       << "B_pc_hat = " << fmt(st.B_pc_hat) << '\n'
       << "energy_p_total = " << fmt(st.energy_p_total) << '\n'
       << "energy_s_total = " << fmt(st.energy_s_total) << '\n'
       << "final_Qp = " << st.final_Qp << '\n';
    return kExitOk;
}

int cmd_sweep(const coopnet::RunConfig& cfg) {
    std::ofstream file;
    auto& os = open_output(cfg, file);
    const auto rows = coopnet::run_sweep(cfg);
    coopnet::write_csv(os, rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-aware primary/secondary cooperation toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-c,--config", opt.config_path, "key = value config file");
    app.add_option("-o,--output", opt.output_path, "output path (default stdout)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "simulation seed override");
    app.add_option("--grid", opt.grid, "grid points per optimizer axis");
    app.add_option("--slots", opt.slots, "simulated slots override");

    auto* sub_baseline = app.add_subcommand("baseline", "non-cooperative benchmark");
    auto* sub_optimize = app.add_subcommand("optimize", "grid-search resource split");
    auto* sub_simulate = app.add_subcommand("simulate", "Monte Carlo at the optimum");
    auto* sub_sweep = app.add_subcommand("sweep", "CSV sweep over a parameter");
    for (auto* sub : {sub_baseline, sub_optimize, sub_simulate, sub_sweep})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    opt.seed_set = seed_opt->count() > 0;

    try {
        const coopnet::RunConfig cfg = load_config(opt);
        if (sub_baseline->parsed()) return cmd_baseline(cfg);
        if (sub_optimize->parsed()) return cmd_optimize(cfg);
        if (sub_simulate->parsed()) return cmd_simulate(cfg);
        if (sub_sweep->parsed()) return cmd_sweep(cfg);
        return kExitValidation;
    } catch (const coopnet::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const coopnet::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
