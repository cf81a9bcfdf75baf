#ifndef COOPNET_TYPES_HPP
#define COOPNET_TYPES_HPP

#include <string>
#include <vector>

namespace coopnet {

// Primary-user activity within one slot.
enum class PrimaryState { Idle, Forward, Retransmission };

// Physical and traffic constants for one primary band shared by one
// primary and one secondary user. Units: Hz, seconds, W/Hz, bits.
// Antenna selection is resolved at configuration time: only the best
// antenna-to-destination gains are stored (sigma_s_sd, sigma_s_pd); the
// p->s combining path uses the common per-antenna gain sigma_p_s.
struct SystemParams {
    double b = 2000.0;           // packet size, bits
    double W = 1e7;              // total bandwidth, Hz
    double T = 4e-4;             // slot duration, s
    double tau = 0.2 * 4e-4;     // sensing time, s
    double N0 = 1e-11;           // noise PSD, W/Hz
    double Pp = 1e-10;           // primary transmit power density, W/Hz
    double Ps = 1e-10;           // secondary transmit power density, W/Hz
    int M = 7;                   // secondary antenna count
    double Q_target = 1e-8;      // max p->s decoding-failure probability
    double sigma_p_pd = 0.2;     // expected gain, primary -> primary dest
    double sigma_s_sd = 0.1;     // best expected gain, SU antenna -> secondary dest
    double sigma_s_pd = 0.5;     // best expected gain, SU antenna -> primary dest
    double sigma_p_s = 1.0;      // per-antenna expected gain, primary -> SU
    double lambda_p = 0.0;       // primary mean arrival rate, packets/slot
    double lambda_s = 1.0;       // secondary mean arrival rate, packets/slot

    double snr_p() const { return Pp / N0; }  // received SNR per unit gain, PU tx
    double snr_s() const { return Ps / N0; }  // received SNR per unit gain, SU tx
};

// Resource split decided by the optimizer: primary subband plus the
// primary transmit-time shares in forward and retransmission slots.
struct ResourceAllocation {
    double Wp = 0.0;   // primary-band bandwidth, Hz
    double TpF = 0.0;  // primary transmit time in forward slots, s
    double TpR = 0.0;  // primary transmit time in retransmission slots, s

    double Ws(const SystemParams& p) const { return p.W - Wp; }
    double TsF(const SystemParams& p) const { return p.T - TpF; }
    double TsR(const SystemParams& p) const { return p.T - TpR; }
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every SystemParams invariant; total function, never throws.
ValidationResult validate(const SystemParams& p);

// Checks ResourceAllocation ranges against the slot geometry of p.
ValidationResult validate(const SystemParams& p, const ResourceAllocation& a);

}  // namespace coopnet

#endif
