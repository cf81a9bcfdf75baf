#ifndef COOPNET_SWEEP_HPP
#define COOPNET_SWEEP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "coopnet/config.hpp"

namespace coopnet {

// Fixed CSV header emitted by run_sweep.
extern const char* const kSweepCsvHeader;

struct SweepRow {
    double sweep_value = 0.0;
    double B_nc_max = 0.0;
    double W_opt = 0.0;
    bool feasible = false;
    double Wp = 0.0, TpF = 0.0, TpR = 0.0;
    double mu_s = 0.0, B_pc = 0.0;
    double mu_s_hat = 0.0, B_pc_hat = 0.0;  // NaN when no simulation ran
    std::uint64_t seed = 0;
};

// One analytic (and optionally simulated) evaluation at the given params.
SweepRow evaluate_point(const SystemParams& params, const OptimizerConfig& ocfg,
                        const SimSpec& sim, double sweep_value);

// Runs the configured sweep (a single point when no sweep variable is
// set) and returns the rows in sweep order.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

// Serializes with 10 significant digits; newline-terminated rows.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string format_row(const SweepRow& row);

}  // namespace coopnet

#endif
