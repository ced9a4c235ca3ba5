#ifndef DAGMCMC_ORDER_MCMC_HPP
#define DAGMCMC_ORDER_MCMC_HPP

#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// A permutation of the node labels. The node at position 0 (leftmost) may
/// take parents only from nodes at later positions; the node at the last
/// position always has an empty parent set.
struct NodeOrder {
  std::vector<int> nodes;  // position -> label

  static NodeOrder identity(int n);
  static NodeOrder random(int n, Rng& rng);
  int node_count() const { return static_cast<int>(nodes.size()); }
  void validate() const;
};

/// Probability of choosing the global swap over the adjacent swap,
/// 6n / (n^2 + 10n - 24), clamped to 1 for n <= 3 where the formula
/// degenerates.
double global_move_weight(int n);

/// Sum over positions of the log score mass of the parent sets permitted by
/// the order: exp of this is the total score of all DAGs consistent with it.
double order_log_score(const NodeOrder& order, const ScoreTable& table);

/// Swap proposal mixing global and adjacent transpositions. Returns the
/// proposed order plus the set of nodes whose permitted parent sets change
/// (all positions between the swapped pair, inclusive).
struct OrderProposal {
  NodeOrder order;
  NodeMask rescored = 0;
  int position_low = 0;
  int position_high = 0;
  bool global = false;
};

OrderProposal propose_order_move(const NodeOrder& order, Rng& rng);

/// Draws one DAG consistent with the order, choosing each node's parent set
/// proportionally to its score among the permitted sets.
Dag sample_dag_from_order(const NodeOrder& order, const ScoreTable& table, Rng& rng);

/// Metropolis-Hastings chain on orders; both swap families are symmetric so
/// the acceptance ratio is just the order-score ratio. Each recorded step
/// also samples one DAG for the trace.
ChainTrace run_order_chain(const NodeOrder& init, const ScoreTable& table,
                           const ChainConfig& config);

}  // namespace dagmcmc

#endif
