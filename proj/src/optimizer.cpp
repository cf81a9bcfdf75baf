#include "coopnet/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coopnet/channel.hpp"

namespace coopnet {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    v.back() = hi;
    return v;
}

double leg_outage(const SystemParams& p, double time, double bw, double snr, double gain) {
    if (time <= 0.0) return 1.0;
    return outage_probability({p.b / time, bw, snr, gain});
}

// Reference B for the energy-incentive constraint. When the baseline
// queue itself is unstable, compare against the saturated-queue baseline
// at full bandwidth instead.
double reference_B(const SystemParams& p, const BaselineReport& base, bool* extended) {
    if (base.feasible) {
        *extended = false;
        return base.B_max;
    }
    *extended = true;
    return base.mu_p_max / (p.Pp * p.T * p.W);
}

OptimumReport finish_report(const SystemParams& p, const OptimizerConfig& cfg,
                            bool found, const ResourceAllocation& best,
                            double baseline_B, bool extended) {
    OptimumReport out;
    out.baseline_B = baseline_B;
    out.extended_baseline = extended;
    out.feasible = found;
    if (!found) return out;

    const double E = min_bandwidth_time_product(p);
    out.alloc = best;
    auto sp = success_probabilities(p, best);
    out.report.chain = solve_chain(p, sp.alpha_p, sp.Gamma_p);
    out.report.mu_s = secondary_throughput(p, best, out.report.chain);
    out.report.B_pc = (p.lambda_p > 0.0 && best.Wp > 0.0)
                          ? primary_packets_per_joule(p, best, out.report.chain)
                          : 0.0;
    out.report.decode_ok = best.Wp * best.TpF >= E;
    out.report.coop_beneficial = out.report.B_pc > baseline_B;
    out.mu_s = out.report.mu_s;
    out.slacks.stability = out.report.chain.eta - p.lambda_p;
    out.slacks.energy = out.report.B_pc - baseline_B * (1.0 + cfg.strictness_eps);
    out.slacks.decode = best.Wp * best.TpF - E;
    return out;
}

}  // namespace

OptimumReport optimize(const SystemParams& p, const OptimizerConfig& cfg) {
    if (cfg.grid_wp < 2 || cfg.grid_tpf < 2 || (cfg.grid_tpr < 2 && !cfg.force_tpr_zero))
        throw std::invalid_argument("optimize: grid counts must be >= 2");

    const double E = min_bandwidth_time_product(p);
    const BaselineReport base = noncoop_optimize(p);
    bool extended = false;
    const double B_ref = reference_B(p, base, &extended);

    const auto wp = linspace(0.0, p.W, cfg.grid_wp);
    const auto tpf = linspace(p.tau, p.T, cfg.grid_tpf);
    const auto tpr = cfg.force_tpr_zero ? std::vector<double>{0.0}
                                        : linspace(0.0, p.T, cfg.grid_tpr);

    const double lam = p.lambda_p;
    const double lam_bar = 1.0 - lam;
    const double snr_s = p.snr_s();

    // Outage factors depend on at most two grid axes; precompute them so
    // the triple loop is pure arithmetic.
    const double out_idle =
        outage_probability({secondary_rate(PrimaryState::Idle, p), p.W, snr_s, p.sigma_s_sd});
    std::vector<double> out_fwd(wp.size()), out_ret(wp.size());
    for (size_t i = 0; i < wp.size(); ++i) {
        const double Ws = p.W - wp[i];
        out_fwd[i] = outage_probability(
            {secondary_rate(PrimaryState::Forward, p), Ws, snr_s, p.sigma_s_sd});
        out_ret[i] = outage_probability(
            {secondary_rate(PrimaryState::Retransmission, p), Ws, snr_s, p.sigma_s_sd});
    }
    std::vector<double> alpha(wp.size() * tpf.size());
    for (size_t i = 0; i < wp.size(); ++i)
        for (size_t j = 0; j < tpf.size(); ++j) {
            const double pu = leg_outage(p, tpf[j], wp[i], p.snr_p(), p.sigma_p_pd);
            const double rel = leg_outage(p, p.T - tpf[j], wp[i], snr_s, p.sigma_s_pd);
            alpha[i * tpf.size() + j] = 1.0 - pu * rel;
        }
    std::vector<double> gamma(wp.size() * tpr.size());
    for (size_t i = 0; i < wp.size(); ++i)
        for (size_t k = 0; k < tpr.size(); ++k) {
            const double pu = leg_outage(p, tpr[k], wp[i], p.snr_p(), p.sigma_p_pd);
            const double rel = leg_outage(p, p.T - tpr[k], wp[i], snr_s, p.sigma_s_pd);
            gamma[i * tpr.size() + k] = 1.0 - pu * rel;
        }

    bool found = false;
    double best_mu = -1.0;
    ResourceAllocation best;

    // Ascending scan with strict improvement implements the tie-break:
    // smallest Wp, then TpF, then TpR among equal objectives.
    for (size_t i = 0; i < wp.size(); ++i) {
        if (wp[i] <= 0.0) continue;
        for (size_t j = 0; j < tpf.size(); ++j) {
            if (wp[i] * tpf[j] < E) continue;
            const double a = alpha[i * tpf.size() + j];
            for (size_t k = 0; k < tpr.size(); ++k) {
                const double g = gamma[i * tpr.size() + k];
                const double eta = lam * a + lam_bar * g;
                if (lam > eta) continue;
                if (lam > 0.0) {
                    if (g <= 0.0) continue;
                    const double B_pc =
                        (tpr[k] > 0.0)
                            ? (a / tpf[j] + (1.0 - a) / tpr[k]) * lam / (wp[i] * p.Pp)
                            : a * lam / (p.Pp * wp[i] * tpf[j]);
                    if (!(B_pc >= B_ref * (1.0 + cfg.strictness_eps))) continue;
                }
                const double pi0 = (g > 0.0) ? std::max(0.0, (eta - lam) / g)
                                             : (lam == 0.0 ? 1.0 : 0.0);
                const double eps_mass = (g > 0.0) ? lam * (1.0 - a) / g : 0.0;
                const double mu = pi0 * (1.0 - out_idle) + lam * (1.0 - out_fwd[i]) +
                                  eps_mass * (1.0 - out_ret[i]);
                if (mu > best_mu) {
                    best_mu = mu;
                    best = {wp[i], tpf[j], tpr[k]};
                    found = true;
                }
            }
        }
    }
    return finish_report(p, cfg, found, best, B_ref, extended);
}

OptimumReport optimize_disconnected(const SystemParams& p, const OptimizerConfig& cfg) {
    if (cfg.grid_wp < 2)
        throw std::invalid_argument("optimize_disconnected: grid_wp must be >= 2");

    const double E = min_bandwidth_time_product(p);
    const BaselineReport base = noncoop_optimize(p);
    bool extended = false;
    const double B_ref = reference_B(p, base, &extended);

    const auto wp = linspace(0.0, p.W, cfg.grid_wp);
    const double lam = p.lambda_p;
    const double snr_s = p.snr_s();

    bool found = false;
    double best_mu = -1.0;
    ResourceAllocation best;

    for (size_t i = 0; i < wp.size(); ++i) {
        if (wp[i] <= 0.0) continue;
        const double TpF = std::max(E / wp[i], p.tau);
        if (TpF > p.T) continue;  // decoding product unreachable at this Wp
        // Relay-only delivery: the direct link is gone.
        const double a = 1.0 - leg_outage(p, p.T - TpF, wp[i], snr_s, p.sigma_s_pd);
        const double g = 1.0 - leg_outage(p, p.T, wp[i], snr_s, p.sigma_s_pd);
        if (lam * (1.0 - a) > (1.0 - lam) * g) continue;
        if (lam > 0.0 && g <= 0.0) continue;
        const double eta = lam * a + (1.0 - lam) * g;
        const double pi0 = (g > 0.0) ? std::max(0.0, (eta - lam) / g)
                                     : (lam == 0.0 ? 1.0 : 0.0);
        const double eps_mass = (g > 0.0) ? lam * (1.0 - a) / g : 0.0;
        const double Ws = p.W - wp[i];
        const double out_idle = outage_probability(
            {secondary_rate(PrimaryState::Idle, p), p.W, snr_s, p.sigma_s_sd});
        const double out_fwd = outage_probability(
            {secondary_rate(PrimaryState::Forward, p), Ws, snr_s, p.sigma_s_sd});
        const double out_ret = outage_probability(
            {secondary_rate(PrimaryState::Retransmission, p), Ws, snr_s, p.sigma_s_sd});
        const double mu = pi0 * (1.0 - out_idle) + lam * (1.0 - out_fwd) +
                          eps_mass * (1.0 - out_ret);
        if (mu > best_mu) {
            best_mu = mu;
            best = {wp[i], TpF, 0.0};
            found = true;
        }
    }

    // Rebuild the winning point with the relay-only success forms; the
    // general two-leg formulas would reintroduce the (absent) direct link.
    OptimumReport out;
    out.baseline_B = B_ref;
    out.extended_baseline = extended;
    out.feasible = found;
    if (!found) return out;
    out.alloc = best;
    const double a = 1.0 - leg_outage(p, p.T - best.TpF, best.Wp, snr_s, p.sigma_s_pd);
    const double g = 1.0 - leg_outage(p, p.T, best.Wp, snr_s, p.sigma_s_pd);
    out.report.chain = solve_chain(p, a, g);
    out.report.mu_s = secondary_throughput(p, best, out.report.chain);
    out.report.B_pc = (lam > 0.0) ? primary_packets_per_joule(p, best, out.report.chain) : 0.0;
    out.report.decode_ok = best.Wp * best.TpF >= E;
    out.report.coop_beneficial = out.report.B_pc > B_ref;
    out.mu_s = out.report.mu_s;
    out.slacks.stability = out.report.chain.eta - lam;
    out.slacks.energy = out.report.B_pc - B_ref * (1.0 + cfg.strictness_eps);
    out.slacks.decode = best.Wp * best.TpF - E;
    return out;
}

}  // namespace coopnet
