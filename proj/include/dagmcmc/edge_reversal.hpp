#ifndef DAGMCMC_EDGE_REVERSAL_HPP
#define DAGMCMC_EDGE_REVERSAL_HPP

#include <optional>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/partition.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// One resampling edge-reversal proposal: a uniformly chosen edge u -> v is
/// reversed by wiping the parent sets of both endpoints, then redrawing the
/// parents of u (forced to include v) and of v, each proportional to score
/// among the sets that keep the graph acyclic. The z values are the log
/// normalizers of the two forward draws and of the mirrored backward draws,
/// which enter the acceptance ratio
///   min{ 1, (|E| z1 z2) / (|E'| z1' z2') }.
struct RevProposal {
  Dag proposed;
  int edge_parent = -1;  // the reversed edge in the current graph
  int edge_child = -1;
  double log_forward_z1 = 0.0;
  double log_forward_z2 = 0.0;
  double log_backward_z1 = 0.0;
  double log_backward_z2 = 0.0;
  int edge_count_before = 0;
  int edge_count_after = 0;

  double log_acceptance_ratio() const;
};

/// Draws the proposal for a given edge index (deterministic edge choice,
/// random parent draws); nullopt when a required draw has no admissible set.
std::optional<RevProposal> propose_rev_for_edge(const Dag& state, const ScoreTable& table,
                                                Edge edge, Rng& rng);

enum class RevOutcome { kNoEdge, kRejected, kAccepted };

/// Full move: pick an edge uniformly, propose, accept or stay. A graph
/// without edges is returned unchanged and reported as kNoEdge.
RevOutcome rev_step(Dag& state, const ScoreTable& table, Rng& rng);

/// Edge reversal inside the partition sampler: sample a DAG from the
/// current labelled partition, run rev_step on it, and map the result back
/// through its outpoint decomposition. No extra acceptance correction is
/// needed; the partition scores cancel against the DAG sampling weights.
LabelledPartition rev_partition_step(const LabelledPartition& part,
                                     const ScoreTable& table, Rng& rng,
                                     RevOutcome* outcome = nullptr);

}  // namespace dagmcmc

#endif
