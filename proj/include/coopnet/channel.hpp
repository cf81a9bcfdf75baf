#ifndef COOPNET_CHANNEL_HPP
#define COOPNET_CHANNEL_HPP

#include "coopnet/types.hpp"

namespace coopnet {

// One point-to-point Rayleigh link attempt: the attempted rate, the
// bandwidth it occupies, the per-unit-gain received SNR and the expected
// channel gain.
struct LinkSpec {
    double rate;       // bits/s
    double bandwidth;  // Hz
    double snr;        // P^j / N0, dimensionless
    double gain;       // expected link gain, dimensionless
};

// Probability that the attempted rate exceeds the instantaneous channel
// capacity: 1 - exp(-(2^(rate/bandwidth) - 1) / (gain * snr)).
// Degenerate inputs (zero bandwidth, gain or SNR) give certain outage, as
// does a spectral efficiency demand above 1024 bits/s/Hz (2^x overflow).
// Result clamped to [0,1].
double outage_probability(const LinkSpec& link);

// Secondary own-data transmission rate for a given primary state:
// b/(T - tau) when the SU must sense (idle/forward), b/T when the prior
// NACK makes sensing unnecessary (retransmission).
double secondary_rate(PrimaryState state, const SystemParams& params);

// Probability the SU fails to decode the primary packet in a forward slot
// when combining its M antennas: Pr{ sum of M iid Exponential(sigma_p_s)
// gains * snr_p < 2^(b/(TpF*Wp)) - 1 }, the Erlang-M CDF.
// Throws std::domain_error when Wp or TpF is zero (rate undefined).
double mrc_decode_failure(const SystemParams& params, const ResourceAllocation& alloc);

// Separate-decoding upper bound on the same probability:
// [1 - exp(-x / (sigma_p_s * snr_p))]^M.
double mrc_decode_failure_bound(const SystemParams& params, const ResourceAllocation& alloc);

// Minimum Wp*TpF product (Hz*s) that keeps the separate-decoding failure
// probability at or below Q_target:
// b / log2(1 - sigma_p_s * snr_p * ln(1 - Q_target^(1/M))).
double min_bandwidth_time_product(const SystemParams& params);

}  // namespace coopnet

#endif
