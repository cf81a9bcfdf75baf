#ifndef COOPNET_OPTIMIZER_HPP
#define COOPNET_OPTIMIZER_HPP

#include "coopnet/baseline.hpp"
#include "coopnet/coop.hpp"
#include "coopnet/types.hpp"

namespace coopnet {

struct OptimizerConfig {
    int grid_wp = 200;            // grid points over Wp in [0, W]
    int grid_tpf = 200;           // grid points over TpF in [tau, T]
    int grid_tpr = 200;           // grid points over TpR in [0, T]
    double strictness_eps = 1e-9; // relative margin for B_pc > B_max
    bool force_tpr_zero = false;  // restrict the TpR axis to {0}
};

struct ConstraintSlacks {
    double stability = 0.0;  // eta - lambda_p
    double energy = 0.0;     // B_pc - B_ref*(1+eps)
    double decode = 0.0;     // Wp*TpF - minimum bandwidth-time product
};

struct OptimumReport {
    ResourceAllocation alloc;
    double mu_s = 0.0;
    CoopReport report;
    bool feasible = false;
    bool extended_baseline = false;  // baseline unstable; compared against
                                     // saturated-queue B at full bandwidth
    double baseline_B = 0.0;         // the B the energy constraint compared against
    ConstraintSlacks slacks;
};

// Exhaustive grid search of the secondary service rate over
// (Wp, TpF, TpR) subject to primary stability (lambda_p <= eta), the
// energy incentive (B_pc > baseline B, with a relative strictness margin;
// vacuous at lambda_p = 0), and the relay decoding product
// (Wp*TpF >= minimum bandwidth-time product). Ties in mu_s resolve to the
// smallest Wp, then TpF, then TpR. Infeasibility is reported, not thrown.
OptimumReport optimize(const SystemParams& params, const OptimizerConfig& cfg);

// Disconnected-direct-link special case (sigma_p_pd ~ 0): TpF is pinned
// to max(E/Wp, tau), TpR to 0, delivery works through the relay alone,
// and only Wp is searched subject to lambda_p/(1-lambda_p) <= Gamma_p/(1-alpha_p).
OptimumReport optimize_disconnected(const SystemParams& params, const OptimizerConfig& cfg);

}  // namespace coopnet

#endif
