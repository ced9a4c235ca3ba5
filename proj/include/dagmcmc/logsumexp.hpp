#ifndef DAGMCMC_LOGSUMEXP_HPP
#define DAGMCMC_LOGSUMEXP_HPP

#include <cmath>
#include <limits>
#include <span>

namespace dagmcmc {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without leaving log space.
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = (a > b) ? a : b;
  const double lo = (a > b) ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

/// log(sum_i exp(v_i)) with a max shift. Empty input gives -inf.
double log_sum_exp(std::span<const double> values);

/// log(exp(a) - exp(b)) for a >= b; -inf when the difference underflows.
double log_sub_exp(double a, double b);

}  // namespace dagmcmc

#endif
