#include "coopnet/baseline.hpp"

#include <cmath>

namespace coopnet {

double noncoop_service_rate(const SystemParams& params, double Wb) {
    if (Wb <= 0.0) return 0.0;
    const double se = params.b / (Wb * params.T);
    if (se > 1024.0) return 0.0;
    const double snr = params.snr_p() * params.sigma_p_pd;
    if (snr <= 0.0) return 0.0;
    return std::exp(-(std::exp2(se) - 1.0) / snr);
}

BaselineReport noncoop_optimize(const SystemParams& params) {
    BaselineReport r;
    r.mu_p_max = noncoop_service_rate(params, params.W);
    if (params.lambda_p == 0.0) {
        r.feasible = true;
        r.W_opt = 0.0;
        r.mu_p_nc = 0.0;
        r.B_max = 0.0;
        return r;
    }
    if (params.lambda_p > r.mu_p_max) {
        r.feasible = false;
        return r;
    }
    const double snr = params.snr_p() * params.sigma_p_pd;
    r.feasible = true;
    r.W_opt = params.b / (params.T * std::log2(1.0 - snr * std::log(params.lambda_p)));
    r.mu_p_nc = noncoop_service_rate(params, r.W_opt);
    r.B_max = params.lambda_p / (params.Pp * params.T * r.W_opt);
    return r;
}

}  // namespace coopnet
