#include "coopnet/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "coopnet/incomplete_gamma.hpp"

namespace coopnet {

namespace {
constexpr double kMaxSpectralEfficiency = 1024.0;  // 2^x overflow guard

double clamp01(double p) {
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}
}  // namespace

double outage_probability(const LinkSpec& link) {
    if (link.bandwidth <= 0.0 || link.gain <= 0.0 || link.snr <= 0.0) return 1.0;
    const double se = link.rate / link.bandwidth;
    if (se > kMaxSpectralEfficiency) return 1.0;
    const double threshold = std::exp2(se) - 1.0;
    return clamp01(-std::expm1(-threshold / (link.gain * link.snr)));
}

double secondary_rate(PrimaryState state, const SystemParams& params) {
    if (state == PrimaryState::Retransmission) return params.b / params.T;
    return params.b / (params.T - params.tau);
}

double mrc_decode_failure(const SystemParams& params, const ResourceAllocation& alloc) {
    if (alloc.Wp <= 0.0 || alloc.TpF <= 0.0)
        throw std::domain_error("mrc_decode_failure: Wp and TpF must be positive");
    const double se = params.b / (alloc.TpF * alloc.Wp);
    if (se > kMaxSpectralEfficiency) return 1.0;
    const double threshold = std::exp2(se) - 1.0;
    const double mean = params.sigma_p_s * params.snr_p();
    if (mean <= 0.0) return 1.0;
    return clamp01(erlang_cdf(params.M, mean, threshold));
}

double mrc_decode_failure_bound(const SystemParams& params, const ResourceAllocation& alloc) {
    if (alloc.Wp <= 0.0 || alloc.TpF <= 0.0)
        throw std::domain_error("mrc_decode_failure_bound: Wp and TpF must be positive");
    const double single = outage_probability(
        {params.b / alloc.TpF, alloc.Wp, params.snr_p(), params.sigma_p_s});
    return clamp01(std::pow(single, params.M));
}

double min_bandwidth_time_product(const SystemParams& params) {
    const double snr = params.sigma_p_s * params.snr_p();
    if (snr <= 0.0)
        throw std::domain_error("min_bandwidth_time_product: sigma_p_s * snr_p must be > 0");
    const double q_root = std::pow(params.Q_target, 1.0 / params.M);
    return params.b / std::log2(1.0 - snr * std::log1p(-q_root));
}

}  // namespace coopnet
