#include "coopnet/incomplete_gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coopnet {

namespace {

constexpr double kTol = 1e-15;
constexpr int kMaxIter = 500;

// gamma(a,x)/Gamma(a) via the power series, valid and fast for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kTol) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Gamma(a,x)/Gamma(a) via modified Lentz continued fraction, for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kTol;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kTol) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0)) throw std::domain_error("regularized_lower_gamma: a must be > 0");
    if (x < 0) throw std::domain_error("regularized_lower_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    double p = (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

double erlang_cdf(int k, double mean, double x) {
    if (k < 1) throw std::domain_error("erlang_cdf: k must be >= 1");
    if (!(mean > 0)) throw std::domain_error("erlang_cdf: mean must be > 0");
    if (x <= 0) return 0.0;
    return regularized_lower_gamma(static_cast<double>(k), x / mean);
}

}  // namespace coopnet
