#ifndef COOPNET_COOP_HPP
#define COOPNET_COOP_HPP

#include "coopnet/types.hpp"

namespace coopnet {

// Aggregates of the primary queue's Markov chain under cooperation.
// pi0 + sum_pi + sum_eps = 1 holds identically whenever lambda_p <= eta.
struct ChainSolution {
    double lambda_p = 0.0;
    double alpha_p = 0.0;   // forward-slot delivery probability
    double Gamma_p = 0.0;   // retransmission-slot delivery probability
    double eta = 0.0;       // lambda_p*alpha_p + (1-lambda_p)*Gamma_p
    double psi = 0.0;       // (1-lambda_p)*eta
    double pi0 = 0.0;       // idle probability
    double sum_pi = 0.0;    // total forward-state probability
    double sum_eps = 0.0;   // total retransmission-state probability
    bool stable = false;    // lambda_p < eta, strictly
};

struct CoopReport {
    ChainSolution chain;
    double mu_s = 0.0;             // secondary service rate, packets/slot
    double B_pc = 0.0;             // primary packets per joule
    bool coop_beneficial = false;  // B_pc > baseline B_max
    bool decode_ok = false;        // Wp*TpF >= minimum bandwidth-time product
};

// Delivery probabilities in forward/retransmission slots. Both legs use
// bandwidth Wp; the PU leg attempts rate b/Tp,H and the relay leg b/Ts,H.
// A zero transmit interval on either leg means that leg is silent
// (outage 1 by limit), so e.g. TpR = 0 leaves delivery to the relay alone.
struct SuccessProbabilities {
    double alpha_p;
    double Gamma_p;
};
SuccessProbabilities success_probabilities(const SystemParams& params,
                                           const ResourceAllocation& alloc);

// Solves the chain in closed form. Throws std::domain_error when
// Gamma_p = 0 with lambda_p > 0 (the chain absorbs in retransmission).
// When lambda_p >= eta the aggregates are still filled in but stable is
// false and per-state probabilities are unavailable.
ChainSolution solve_chain(const SystemParams& params, double alpha_p, double Gamma_p);

// Per-k state probabilities (k >= 1); geometric in lambda_p(1-eta)/psi for
// k >= 2. Throws std::domain_error when the chain is unstable.
double state_probability(const ChainSolution& chain, PrimaryState state, int k);

// Secondary service rate: the own-data link is attempted every slot on
// the full band W when the PU idles and on Ws otherwise, at the
// state-dependent secondary rate. Throws when lambda_p > eta.
double secondary_throughput(const SystemParams& params, const ResourceAllocation& alloc,
                            const ChainSolution& chain);

// Primary packets per joule. TpR > 0 charges retransmission energy
// Pp*Wp*TpR per active slot; TpR = 0 charges none and counts forward
// deliveries only. Throws when Wp = 0 or TpF = 0.
double primary_packets_per_joule(const SystemParams& params, const ResourceAllocation& alloc,
                                 const ChainSolution& chain);

}  // namespace coopnet

#endif
