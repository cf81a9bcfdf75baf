#ifndef COOPNET_BASELINE_HPP
#define COOPNET_BASELINE_HPP

#include "coopnet/types.hpp"

namespace coopnet {

// Non-cooperative benchmark: the PU transmits alone over the whole slot
// with an optimizable bandwidth.
struct BaselineReport {
    double W_opt = 0.0;     // bandwidth-minimizing transmission bandwidth, Hz
    double mu_p_nc = 0.0;   // service rate at W_opt, packets/slot
    double mu_p_max = 0.0;  // service rate at full bandwidth W
    double B_max = 0.0;     // max packets per joule (0 when infeasible)
    bool feasible = false;  // lambda_p <= mu_p_max
};

// Probability of successful primary transmission at bandwidth Wb:
// exp(-(2^(b/(Wb*T)) - 1) / (snr_p * sigma_p_pd)).
double noncoop_service_rate(const SystemParams& params, double Wb);

// Solves the bandwidth-minimizing program: the stability constraint is
// tight at the optimum, W_opt = b / (T * log2(1 - snr*sigma*ln lambda_p)),
// and B_max = lambda_p / (Pp * T * W_opt). lambda_p = 0 degenerates to a
// zero-traffic report; lambda_p > mu_p_max flags infeasibility instead of
// throwing.
BaselineReport noncoop_optimize(const SystemParams& params);

}  // namespace coopnet

#endif
