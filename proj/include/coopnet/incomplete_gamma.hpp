#ifndef COOPNET_INCOMPLETE_GAMMA_HPP
#define COOPNET_INCOMPLETE_GAMMA_HPP

namespace coopnet {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, Lentz continued fraction otherwise;
// both iterated to an absolute tolerance of 1e-15 (well inside the 1e-12
// budget the callers rely on). For integer a this is the Erlang-a CDF at
// unit scale.
double regularized_lower_gamma(double a, double x);

// Erlang CDF: Pr{sum of k iid Exponential(mean) <= x}.
double erlang_cdf(int k, double mean, double x);

}  // namespace coopnet

#endif
