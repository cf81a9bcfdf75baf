#include "coopnet/coop.hpp"

#include <cmath>
#include <stdexcept>

#include "coopnet/channel.hpp"

namespace coopnet {

namespace {
// Outage of one delivery leg transmitting b bits over interval `time` on
// bandwidth `bw`; a zero interval means the leg is silent this state.
double leg_outage(const SystemParams& p, double time, double bw, double snr, double gain) {
    if (time <= 0.0) return 1.0;
    return outage_probability({p.b / time, bw, snr, gain});
}
}  // namespace

SuccessProbabilities success_probabilities(const SystemParams& p,
                                           const ResourceAllocation& a) {
    const double pu_F = leg_outage(p, a.TpF, a.Wp, p.snr_p(), p.sigma_p_pd);
    const double rel_F = leg_outage(p, a.TsF(p), a.Wp, p.snr_s(), p.sigma_s_pd);
    const double pu_R = leg_outage(p, a.TpR, a.Wp, p.snr_p(), p.sigma_p_pd);
    const double rel_R = leg_outage(p, a.TsR(p), a.Wp, p.snr_s(), p.sigma_s_pd);
    return {1.0 - pu_F * rel_F, 1.0 - pu_R * rel_R};
}

ChainSolution solve_chain(const SystemParams& p, double alpha_p, double Gamma_p) {
    const double lam = p.lambda_p;
    if (Gamma_p == 0.0 && lam > 0.0)
        throw std::domain_error("solve_chain: Gamma_p = 0 absorbs the chain in retransmission");
    ChainSolution c;
    c.lambda_p = lam;
    c.alpha_p = alpha_p;
    c.Gamma_p = Gamma_p;
    c.eta = lam * alpha_p + (1.0 - lam) * Gamma_p;
    c.psi = (1.0 - lam) * c.eta;
    c.stable = lam < c.eta;
    if (lam == 0.0) {
        c.pi0 = 1.0;
        c.sum_pi = 0.0;
        c.sum_eps = 0.0;
        return c;
    }
    c.pi0 = (c.eta - lam) / Gamma_p;
    if (c.pi0 < 0.0) c.pi0 = 0.0;
    c.sum_pi = lam;
    c.sum_eps = lam * (1.0 - alpha_p) / Gamma_p;
    return c;
}

double state_probability(const ChainSolution& c, PrimaryState state, int k) {
    if (!c.stable) throw std::domain_error("state_probability: chain is unstable");
    if (k < 1) throw std::domain_error("state_probability: k must be >= 1");
    if (state == PrimaryState::Idle)
        throw std::domain_error("state_probability: idle state has no queue index");
    const double lam = c.lambda_p;
    const double lam_bar = 1.0 - lam;
    const double alpha_bar = 1.0 - c.alpha_p;
    if (lam == 0.0) return 0.0;
    if (k == 1) {
        if (state == PrimaryState::Forward)
            return c.pi0 * (lam / c.psi) * (lam + lam_bar * c.Gamma_p);
        return c.pi0 * lam * alpha_bar / c.eta;
    }
    if (alpha_bar == 0.0) return 0.0;
    const double eta_bar = 1.0 - c.eta;
    const double ratio = lam * eta_bar / c.psi;
    const double geom = std::pow(ratio, k);
    if (state == PrimaryState::Forward)
        return c.pi0 * (lam * alpha_bar / (eta_bar * eta_bar)) * geom;
    return c.pi0 * (lam_bar * alpha_bar / (eta_bar * eta_bar)) * geom;
}

double secondary_throughput(const SystemParams& p, const ResourceAllocation& a,
                            const ChainSolution& c) {
    if (c.lambda_p > c.eta)
        throw std::domain_error("secondary_throughput: primary queue unstable");
    const double snr = p.snr_s();
    const double gain = p.sigma_s_sd;
    const double Ws = a.Ws(p);
    const double p_idle =
        outage_probability({secondary_rate(PrimaryState::Idle, p), p.W, snr, gain});
    const double p_fwd =
        outage_probability({secondary_rate(PrimaryState::Forward, p), Ws, snr, gain});
    const double p_ret =
        outage_probability({secondary_rate(PrimaryState::Retransmission, p), Ws, snr, gain});
    return c.pi0 * (1.0 - p_idle) + c.sum_pi * (1.0 - p_fwd) + c.sum_eps * (1.0 - p_ret);
}

double primary_packets_per_joule(const SystemParams& p, const ResourceAllocation& a,
                                 const ChainSolution& c) {
    if (a.Wp <= 0.0)
        throw std::domain_error("primary_packets_per_joule: Wp must be positive");
    if (a.TpF <= 0.0)
        throw std::domain_error("primary_packets_per_joule: TpF must be positive");
    const double lam = c.lambda_p;
    if (lam == 0.0) return 0.0;
    if (a.TpR > 0.0) {
        return (c.alpha_p / a.TpF + (1.0 - c.alpha_p) / a.TpR) * lam / (a.Wp * p.Pp);
    }
    return c.alpha_p * lam / (p.Pp * a.Wp * a.TpF);
}

}  // namespace coopnet
