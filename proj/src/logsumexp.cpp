#include "dagmcmc/logsumexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace dagmcmc {

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) return kNegInf;
  const double hi = *std::max_element(values.begin(), values.end());
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

double log_sub_exp(double a, double b) {
  if (b == kNegInf) return a;
  if (b > a) throw std::invalid_argument("log_sub_exp: negative difference");
  const double d = -std::expm1(b - a);
  if (d <= 0.0) return kNegInf;
  return a + std::log(d);
}

}  // namespace dagmcmc
