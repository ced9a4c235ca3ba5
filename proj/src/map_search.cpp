#include "dagmcmc/map_search.hpp"

#include <cmath>
#include <stdexcept>

#include "dagmcmc/exact.hpp"
#include "dagmcmc/logsumexp.hpp"
#include "dagmcmc/order_mcmc.hpp"
#include "dagmcmc/sampling.hpp"

namespace dagmcmc {

namespace {

struct OrderMaxState {
  NodeOrder order;
  std::vector<NodeMask> banned;       // per position
  std::vector<double> best_scores;    // per position
  std::vector<NodeMask> best_parents; // per position
  double total = 0.0;

  void rescore_position(int i, const ScoreTable& table) {
    const auto best = max_constrained_log_score(table, order.nodes[i], banned[i], 0);
    best_scores[i] = best->log_score;
    best_parents[i] = best->parents;
  }

  void rebuild(const ScoreTable& table) {
    const int n = order.node_count();
    banned.assign(n, 0);
    NodeMask before = 0;
    for (int i = 0; i < n; ++i) {
      banned[i] = before;
      before |= node_bit(order.nodes[i]);
    }
    best_scores.assign(n, 0.0);
    best_parents.assign(n, 0);
    total = 0.0;
    for (int i = 0; i < n; ++i) {
      rescore_position(i, table);
      total += best_scores[i];
    }
  }

  Dag best_dag() const {
    const int n = order.node_count();
    std::vector<NodeMask> parents(n, 0);
    for (int i = 0; i < n; ++i) parents[order.nodes[i]] = best_parents[i];
    return Dag::from_parent_masks(std::move(parents));
  }
};

}  // namespace

MapSearchResult map_search(const ScoreTable& table, const MapSearchConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("map search: restarts must be >= 1");
  if (config.steps_per_restart < 1)
    throw std::invalid_argument("map search: steps_per_restart must be >= 1");
  const int n = table.variable_count();

  MapSearchResult result;
  result.best_log_score = kNegInf;
  result.restart_best_scores.reserve(config.restarts);

  for (int restart = 0; restart < config.restarts; ++restart) {
    Rng rng(config.seed + static_cast<std::uint64_t>(restart));
    OrderMaxState state;
    state.order = NodeOrder::random(n, rng);
    state.rebuild(table);

    double restart_best = state.total;
    Dag restart_best_dag = state.best_dag();

    for (long long t = 0; t < config.steps_per_restart; ++t) {
      if (n < 2 || uniform_real(rng) < config.stay_still_prob) continue;
      const double gamma =
          config.gamma0 *
          std::pow(config.gamma_rate, static_cast<double>(t / config.gamma_block));
      OrderProposal proposal = propose_order_move(state.order, rng);

      OrderMaxState next = state;
      next.order = proposal.order;
      NodeMask before = (proposal.position_low > 0)
                            ? (next.banned[proposal.position_low - 1] |
                               node_bit(state.order.nodes[proposal.position_low - 1]))
                            : 0;
      for (int i = proposal.position_low; i <= proposal.position_high; ++i) {
        next.banned[i] = before;
        before |= node_bit(next.order.nodes[i]);
        next.rescore_position(i, table);
      }
      next.total = 0.0;
      for (double s : next.best_scores) next.total += s;

      const double delta = next.total - state.total;
      if (std::log(uniform_real(rng)) < gamma * delta) {
        state = std::move(next);
        if (state.total > restart_best) {
          restart_best = state.total;
          restart_best_dag = state.best_dag();
        }
      }
    }

    result.restart_best_scores.push_back(restart_best);
    if (restart_best > result.best_log_score) {
      result.best_log_score = restart_best;
      result.best_dag = restart_best_dag;
    }
  }

  constexpr double kTol = 1e-9;
  for (double s : result.restart_best_scores) {
    if (s >= result.best_log_score - kTol) ++result.hits;
  }
  result.p_star = static_cast<double>(result.hits) / config.restarts;
  result.confidence_bound = std::pow(1.0 - result.p_star, config.restarts);
  if (n <= 8) {
    result.best_linear_extensions = count_linear_extensions(result.best_dag);
    const double adjusted_rate = static_cast<double>(result.hits) /
                                 (static_cast<double>(result.best_linear_extensions) *
                                  config.restarts);
    result.adjusted_bound = std::pow(1.0 - adjusted_rate, config.restarts);
  }
  return result;
}

}  // namespace dagmcmc
