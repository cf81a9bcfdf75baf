#ifndef COOPNET_SIMULATOR_HPP
#define COOPNET_SIMULATOR_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "coopnet/types.hpp"

namespace coopnet {

enum class Feedback { None, Ack, Nack };

struct NodeQueues {
    std::uint64_t Qp = 0;   // primary own-data queue
    std::uint64_t Qs = 0;   // secondary own-data queue
    unsigned Qps = 0;       // relaying queue, at most one packet
};

struct SlotOutcome {
    PrimaryState state = PrimaryState::Idle;
    bool primary_success = false;
    bool secondary_success = false;
    bool relay_decode = false;  // SU decoded the primary packet this slot
    double energy_p = 0.0;      // primary joules spent this slot
    double energy_s = 0.0;      // secondary joules spent this slot
    Feedback feedback = Feedback::None;
};

struct SimOptions {
    std::uint64_t warmup = 10000;  // slots discarded before counting
    bool force_decode = false;     // idealized always-correct relay decoding
};

struct SimStats {
    std::uint64_t slots = 0;      // counted slots (after warm-up)
    std::uint64_t rng_seed = 0;
    double pi0_hat = 0.0;         // empirical idle frequency
    double sum_pi_hat = 0.0;      // empirical forward frequency
    double sum_eps_hat = 0.0;     // empirical retransmission frequency
    // occupancy[state][k]: frequency of (Forward,k)=0 / (Retransmission,k)=1
    // pairs, k capped at kMaxTrackedQueue.
    static constexpr int kMaxTrackedQueue = 64;
    std::vector<double> occupancy_fwd;   // index k, 1..kMaxTrackedQueue
    std::vector<double> occupancy_ret;
    double mu_s_hat = 0.0;        // secondary ACKs per counted slot
    double mu_p_hat = 0.0;        // primary ACKs per counted slot
    double B_pc_hat = 0.0;        // primary ACKs per joule of primary energy
    double energy_p_total = 0.0;  // joules, counted slots
    double energy_s_total = 0.0;
    // Pr{Qp > y} for y in {1, 10, 100, 1000, 10000}, counted slots.
    std::vector<double> queue_tail;
    // Qp sampled every queue_trace_stride slots (including warm-up),
    // for drift fits on unstable runs.
    std::uint64_t queue_trace_stride = 1000;
    std::vector<std::uint64_t> queue_trace;
    std::uint64_t final_Qp = 0;
};

// Deterministic per-run random stream: std::mt19937_64 seeded once; each
// uniform draw maps the top 53 bits to [0,1), exponentials are inverse-CDF
// (-mean*log1p(-u)). Draw order within a slot: relay decode (forward slots
// with Wp*TpF > 0, skipped in force_decode mode), then one gain per active
// link in the order primary leg, relay leg, secondary own data, then the
// primary and secondary arrival draws.
class SlotRng {
public:
    explicit SlotRng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }
    double exponential(double mean) { return -mean * std::log1p(-uniform()); }
    bool bernoulli(double prob) { return uniform() < prob; }

private:
    std::mt19937_64 gen_;
};

// Advances the system by one slot: state resolution (idle when Qp = 0,
// retransmission after a NACK, forward otherwise), per-link fading draws,
// decoding, feedback, energy accounting, then late-arrival queue updates
// (departures before arrivals).
SlotOutcome step(NodeQueues& queues, const SystemParams& params,
                 const ResourceAllocation& alloc, Feedback prev_feedback,
                 SlotRng& rng, const SimOptions& opts);

// Runs `slots` counted slots (after opts.warmup discarded ones) and
// aggregates. Bit-reproducible for a fixed seed.
SimStats run(const SystemParams& params, const ResourceAllocation& alloc,
             std::uint64_t slots, std::uint64_t seed, const SimOptions& opts = {});

}  // namespace coopnet

#endif
