#ifndef DAGMCMC_MAP_SEARCH_HPP
#define DAGMCMC_MAP_SEARCH_HPP

#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// Annealed stochastic search for the highest-scoring DAG, run on node
/// orders: an order's value is the best score over the DAGs consistent with
/// it, and a swap proposal is accepted with min{1, exp(gamma * delta)}.
/// gamma follows a geometric schedule gamma_0 * rate^floor(t / block).
struct MapSearchConfig {
  long long steps_per_restart = 2000;
  int restarts = 100;
  std::uint64_t seed = 0;
  double gamma0 = 1.0;
  double gamma_rate = 1.2;
  long long gamma_block = 1000;
  double stay_still_prob = 0.01;
};

struct MapSearchResult {
  Dag best_dag;
  double best_log_score = 0.0;
  std::vector<double> restart_best_scores;
  int hits = 0;              // restarts that found the overall best
  double p_star = 0.0;       // hits / restarts
  double confidence_bound = 0.0;          // (1 - p_star)^restarts
  long long best_linear_extensions = 0;   // 0 when not computed (n > 8)
  double adjusted_bound = 0.0;  // (1 - hits / (W * restarts))^restarts, W = extensions
};

MapSearchResult map_search(const ScoreTable& table, const MapSearchConfig& config);

}  // namespace dagmcmc

#endif
