#include "dagmcmc/edge_reversal.hpp"

#include <cmath>

#include "dagmcmc/partition_mcmc.hpp"
#include "dagmcmc/sampling.hpp"

namespace dagmcmc {

double RevProposal::log_acceptance_ratio() const {
  return std::log(static_cast<double>(edge_count_before)) -
         std::log(static_cast<double>(edge_count_after)) + log_forward_z1 +
         log_forward_z2 - log_backward_z1 - log_backward_z2;
}

std::optional<RevProposal> propose_rev_for_edge(const Dag& state, const ScoreTable& table,
                                                Edge edge, Rng& rng) {
  const int u = edge.parent;
  const int v = edge.child;

  // Orphan both endpoints; all other parent sets stay untouched.
  Dag orphaned = state;
  orphaned.set_parents(u, 0);
  orphaned.set_parents(v, 0);
  const std::vector<NodeMask> desc0 = descendant_masks(orphaned);

  // New parents of u must contain v and avoid u's current descendants.
  const auto draw_u = draw_parent_set(table, u, desc0[u], node_bit(v), rng);
  if (!draw_u) return std::nullopt;
  Dag proposed = orphaned;
  proposed.set_parents(u, draw_u->parents);

  const std::vector<NodeMask> desc1 = descendant_masks(proposed);
  const auto draw_v = draw_parent_set(table, v, desc1[v], 0, rng);
  if (!draw_v) return std::nullopt;
  proposed.set_parents(v, draw_v->parents);

  // Mirrored backward pass: reversing v -> u from the proposal regenerates
  // the current graph by first redrawing v (forced to include u) in the
  // same orphaned graph, then u given v's original parents.
  const auto z1_back = constrained_log_score_sum(table, v, desc0[v], node_bit(u));
  Dag backward_mid = orphaned;
  backward_mid.set_parents(v, state.parents(v));
  const std::vector<NodeMask> desc1b = descendant_masks(backward_mid);
  const auto z2_back = constrained_log_score_sum(table, u, desc1b[u], 0);
  if (!z1_back || !z2_back) return std::nullopt;

  RevProposal out;
  out.proposed = std::move(proposed);
  out.edge_parent = u;
  out.edge_child = v;
  out.log_forward_z1 = draw_u->log_normalizer;
  out.log_forward_z2 = draw_v->log_normalizer;
  out.log_backward_z1 = *z1_back;
  out.log_backward_z2 = *z2_back;
  out.edge_count_before = state.edge_count();
  out.edge_count_after = out.proposed.edge_count();
  return out;
}

RevOutcome rev_step(Dag& state, const ScoreTable& table, Rng& rng) {
  if (state.edge_count() == 0) return RevOutcome::kNoEdge;
  const std::vector<Edge> edges = state.edges();
  const Edge edge = edges[uniform_index(rng, static_cast<long long>(edges.size()))];
  const auto proposal = propose_rev_for_edge(state, table, edge, rng);
  if (!proposal) return RevOutcome::kRejected;
  const double log_u = std::log(uniform_real(rng));
  if (log_u < proposal->log_acceptance_ratio()) {
    state = proposal->proposed;
    return RevOutcome::kAccepted;
  }
  return RevOutcome::kRejected;
}

LabelledPartition rev_partition_step(const LabelledPartition& part,
                                     const ScoreTable& table, Rng& rng,
                                     RevOutcome* outcome) {
  Dag dag = sample_dag_from_partition(part, table, rng);
  const RevOutcome result = rev_step(dag, table, rng);
  if (outcome != nullptr) *outcome = result;
  if (result != RevOutcome::kAccepted) return part;
  return outpoint_decomposition(dag);
}

}  // namespace dagmcmc
