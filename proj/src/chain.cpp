#include "dagmcmc/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace dagmcmc {

void ChainConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("chain: steps must be >= 1");
  if (thin < 1) throw std::invalid_argument("chain: thin must be >= 1");
  if (stay_still_prob < 0.0 || p_rev < 0.0 || stay_still_prob + p_rev > 1.0)
    throw std::invalid_argument("chain: need 0 <= p_rev + stay_still_prob <= 1");
  if (p_rev >= 1.0) throw std::invalid_argument("chain: p_rev must be < 1");
  if (burn_in_fraction < 0.0 || burn_in_fraction >= 1.0)
    throw std::invalid_argument("chain: burn_in_fraction must be in [0, 1)");
}

std::vector<const TraceRecord*> ChainTrace::post_burn_in(
    long long steps, double burn_in_fraction) const {
  const double cutoff = burn_in_fraction * static_cast<double>(steps);
  std::vector<const TraceRecord*> out;
  for (const TraceRecord& r : records) {
    if (static_cast<double>(r.step) >= cutoff) out.push_back(&r);
  }
  return out;
}

std::vector<std::vector<double>> edge_posterior_from_traces(
    const std::vector<ChainTrace>& traces, int n, long long steps,
    double burn_in_fraction) {
  std::vector<std::vector<double>> sums(n, std::vector<double>(n, 0.0));
  long long count = 0;
  for (const ChainTrace& trace : traces) {
    for (const TraceRecord* r : trace.post_burn_in(steps, burn_in_fraction)) {
      if (!r->dag) continue;
      ++count;
      for (int child = 0; child < n; ++child) {
        for_each_node(r->dag->parents(child), [&](int parent) {
          sums[child][parent] += 1.0;
        });
      }
    }
  }
  if (count == 0)
    throw std::runtime_error("edge posterior: no samples left after burn-in");
  for (auto& row : sums)
    for (double& v : row) v /= static_cast<double>(count);
  return sums;
}

}  // namespace dagmcmc
