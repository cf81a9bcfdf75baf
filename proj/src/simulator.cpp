#include "coopnet/simulator.hpp"

#include <cmath>

#include "coopnet/channel.hpp"

namespace coopnet {

namespace {

// Fading threshold: the drawn gain must reach (2^(rate/bw) - 1)/snr for
// the link to close. Infinite for inactive links.
double gain_threshold(double bits, double time, double bw, double snr) {
    if (time <= 0.0 || bw <= 0.0 || snr <= 0.0) return HUGE_VAL;
    const double se = bits / (time * bw);
    if (se > 1024.0) return HUGE_VAL;
    return (std::exp2(se) - 1.0) / snr;
}

bool link_closes(SlotRng& rng, double mean_gain, double threshold) {
    if (threshold == HUGE_VAL || mean_gain <= 0.0) return false;
    return rng.exponential(mean_gain) >= threshold;
}

}  // namespace

SlotOutcome step(NodeQueues& q, const SystemParams& p, const ResourceAllocation& a,
                 Feedback prev_feedback, SlotRng& rng, const SimOptions& opts) {
    SlotOutcome out;
    const double Ws = a.Ws(p);
    const double TsF = a.TsF(p);
    const double TsR = a.TsR(p);

    if (prev_feedback == Feedback::Nack) {
        out.state = PrimaryState::Retransmission;
    } else {
        out.state = (q.Qp == 0) ? PrimaryState::Idle : PrimaryState::Forward;
    }

    bool secondary_active = false;
    double sec_time = 0.0, sec_bw = 0.0;

    switch (out.state) {
        case PrimaryState::Forward: {
            out.energy_p = p.Pp * a.Wp * a.TpF;
            if (a.Wp > 0.0 && a.TpF > 0.0) {
                if (opts.force_decode) {
                    out.relay_decode = true;
                } else {
                    out.relay_decode = !rng.bernoulli(mrc_decode_failure(p, a));
                }
            }
            if (out.relay_decode) q.Qps = 1;
            bool pu_ok = false, relay_ok = false;
            if (a.Wp > 0.0 && a.TpF > 0.0) {
                pu_ok = link_closes(rng, p.sigma_p_pd,
                                    gain_threshold(p.b, a.TpF, a.Wp, p.snr_p()));
            }
            if (q.Qps == 1 && a.Wp > 0.0 && TsF > 0.0) {
                relay_ok = link_closes(rng, p.sigma_s_pd,
                                       gain_threshold(p.b, TsF, a.Wp, p.snr_s()));
                out.energy_s += p.Ps * a.Wp * TsF;
            }
            out.primary_success = pu_ok || relay_ok;
            out.feedback = out.primary_success ? Feedback::Ack : Feedback::Nack;
            sec_time = p.T - p.tau;
            sec_bw = Ws;
            secondary_active = true;
            break;
        }
        case PrimaryState::Retransmission: {
            out.energy_p = p.Pp * a.Wp * a.TpR;
            bool pu_ok = false, relay_ok = false;
            if (a.Wp > 0.0 && a.TpR > 0.0) {
                pu_ok = link_closes(rng, p.sigma_p_pd,
                                    gain_threshold(p.b, a.TpR, a.Wp, p.snr_p()));
            }
            if (q.Qps == 1 && a.Wp > 0.0 && TsR > 0.0) {
                relay_ok = link_closes(rng, p.sigma_s_pd,
                                       gain_threshold(p.b, TsR, a.Wp, p.snr_s()));
                out.energy_s += p.Ps * a.Wp * TsR;
            }
            out.primary_success = pu_ok || relay_ok;
            out.feedback = out.primary_success ? Feedback::Ack : Feedback::Nack;
            sec_time = p.T;  // no sensing after a NACK
            sec_bw = Ws;
            secondary_active = true;
            break;
        }
        case PrimaryState::Idle: {
            out.feedback = Feedback::None;
            sec_time = p.T - p.tau;
            sec_bw = p.W;
            secondary_active = true;
            break;
        }
    }

    if (secondary_active && q.Qs > 0 && sec_bw > 0.0) {
        out.secondary_success = link_closes(
            rng, p.sigma_s_sd, gain_threshold(p.b, sec_time, sec_bw, p.snr_s()));
        out.energy_s += p.Ps * sec_bw * sec_time;
    }

    // Late-arrival queue evolution: departures first, then arrivals.
    if (out.primary_success) {
        if (q.Qp > 0) --q.Qp;
        q.Qps = 0;
    }
    if (out.secondary_success && q.Qs > 0) --q.Qs;
    if (rng.bernoulli(p.lambda_p)) ++q.Qp;
    if (rng.bernoulli(p.lambda_s)) ++q.Qs;

    return out;
}

SimStats run(const SystemParams& p, const ResourceAllocation& a, std::uint64_t slots,
             std::uint64_t seed, const SimOptions& opts) {
    SimStats st;
    st.rng_seed = seed;
    st.slots = slots;
    st.occupancy_fwd.assign(SimStats::kMaxTrackedQueue + 1, 0.0);
    st.occupancy_ret.assign(SimStats::kMaxTrackedQueue + 1, 0.0);
    const std::uint64_t tails[] = {1, 10, 100, 1000, 10000};
    std::uint64_t tail_counts[5] = {0, 0, 0, 0, 0};

    SlotRng rng(seed);
    NodeQueues q;
    Feedback fb = Feedback::None;

    std::uint64_t idle = 0, fwd = 0, ret = 0;
    std::uint64_t acks_p = 0, acks_s = 0;

    const std::uint64_t total = opts.warmup + slots;
    for (std::uint64_t t = 0; t < total; ++t) {
        if (t % st.queue_trace_stride == 0) st.queue_trace.push_back(q.Qp);
        const std::uint64_t k = q.Qp;
        SlotOutcome o = step(q, p, a, fb, rng, opts);
        fb = o.feedback;
        if (t < opts.warmup) continue;

        switch (o.state) {
            case PrimaryState::Idle: ++idle; break;
            case PrimaryState::Forward: ++fwd; break;
            case PrimaryState::Retransmission: ++ret; break;
        }
        const std::uint64_t kc =
            k > SimStats::kMaxTrackedQueue ? SimStats::kMaxTrackedQueue : k;
        if (o.state == PrimaryState::Forward) st.occupancy_fwd[kc] += 1.0;
        if (o.state == PrimaryState::Retransmission) st.occupancy_ret[kc] += 1.0;
        for (int i = 0; i < 5; ++i)
            if (q.Qp > tails[i]) ++tail_counts[i];
        if (o.primary_success) ++acks_p;
        if (o.secondary_success) ++acks_s;
        st.energy_p_total += o.energy_p;
        st.energy_s_total += o.energy_s;
    }
    st.final_Qp = q.Qp;

    const double n = static_cast<double>(slots);
    st.pi0_hat = idle / n;
    st.sum_pi_hat = fwd / n;
    st.sum_eps_hat = ret / n;
    for (auto& v : st.occupancy_fwd) v /= n;
    for (auto& v : st.occupancy_ret) v /= n;
    st.mu_s_hat = acks_s / n;
    st.mu_p_hat = acks_p / n;
    st.B_pc_hat = st.energy_p_total > 0.0 ? acks_p / st.energy_p_total : 0.0;
    st.queue_tail.assign(5, 0.0);
    for (int i = 0; i < 5; ++i) st.queue_tail[i] = tail_counts[i] / n;
    return st;
}

}  // namespace coopnet
