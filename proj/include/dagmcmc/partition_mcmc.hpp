#ifndef DAGMCMC_PARTITION_MCMC_HPP
#define DAGMCMC_PARTITION_MCMC_HPP

#include "dagmcmc/chain.hpp"
#include "dagmcmc/partition.hpp"
#include "dagmcmc/partition_moves.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// Log of the summed score mass of all DAGs consistent with the labelled
/// partition: each node sums its permitted parent sets (none from its own
/// element or further left, at least one from the element immediately
/// right). Returns -inf when some node has no permitted set, which can
/// happen only when the parent limit is 0.
double partition_log_score(const LabelledPartition& part, const ScoreTable& table);

/// Draws one DAG consistent with the partition, each node's parent set
/// proportional to its score among the permitted sets. The outpoint
/// decomposition of the result is always the partition itself.
Dag sample_dag_from_partition(const LabelledPartition& part, const ScoreTable& table,
                              Rng& rng);

/// Metropolis-Hastings over labelled partitions. Per step: stay still with
/// config.stay_still_prob; otherwise run the resampling edge reversal with
/// config.p_rev; otherwise pick the partition move class with probability
/// 0.6 (relocation with the global-move weight, else split/join) or the
/// permutation class (global swap with that weight, else adjacent swap).
/// Acceptance uses the proposal probabilities of the chosen family at both
/// endpoints. One DAG is sampled per recorded step.
ChainTrace run_partition_chain(const LabelledPartition& init, const ScoreTable& table,
                               const ChainConfig& config);

}  // namespace dagmcmc

#endif
