#include "coopnet/types.hpp"

#include <cmath>

namespace coopnet {

namespace {
void check(std::vector<std::string>& out, bool ok, const char* msg) {
    if (!ok) out.emplace_back(msg);
}
bool finite(double x) { return std::isfinite(x); }
}  // namespace

ValidationResult validate(const SystemParams& p) {
    ValidationResult r;
    auto& v = r.violations;
    check(v, finite(p.b) && p.b > 0, "b > 0");
    check(v, finite(p.W) && p.W > 0, "W > 0");
    check(v, finite(p.T) && p.T > 0, "T > 0");
    check(v, finite(p.N0) && p.N0 > 0, "N0 > 0");
    check(v, finite(p.Pp) && p.Pp > 0, "Pp > 0");
    check(v, finite(p.Ps) && p.Ps > 0, "Ps > 0");
    check(v, p.M >= 1, "M >= 1");
    check(v, finite(p.tau) && p.tau >= 0 && p.tau < p.T, "0 <= tau < T");
    check(v, finite(p.Q_target) && p.Q_target > 0 && p.Q_target < 1,
          "0 < Q_target < 1");
    check(v, finite(p.sigma_p_pd) && p.sigma_p_pd >= 0, "sigma_p_pd >= 0");
    check(v, finite(p.sigma_s_sd) && p.sigma_s_sd >= 0, "sigma_s_sd >= 0");
    check(v, finite(p.sigma_s_pd) && p.sigma_s_pd >= 0, "sigma_s_pd >= 0");
    check(v, finite(p.sigma_p_s) && p.sigma_p_s >= 0, "sigma_p_s >= 0");
    check(v, finite(p.lambda_p) && p.lambda_p >= 0 && p.lambda_p <= 1,
          "lambda_p in [0,1]");
    check(v, finite(p.lambda_s) && p.lambda_s >= 0 && p.lambda_s <= 1,
          "lambda_s in [0,1]");
    return r;
}

ValidationResult validate(const SystemParams& p, const ResourceAllocation& a) {
    ValidationResult r;
    auto& v = r.violations;
    check(v, finite(a.Wp) && a.Wp >= 0 && a.Wp <= p.W, "0 <= Wp <= W");
    check(v, finite(a.TpF) && a.TpF >= p.tau && a.TpF <= p.T, "tau <= TpF <= T");
    check(v, finite(a.TpR) && a.TpR >= 0 && a.TpR <= p.T, "0 <= TpR <= T");
    return r;
}

}  // namespace coopnet
