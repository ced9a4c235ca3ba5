#include "dagmcmc/structure_mcmc.hpp"

#include <cmath>
#include <stdexcept>

#include "dagmcmc/edge_reversal.hpp"

namespace dagmcmc {

namespace {

struct StructureState {
  Dag dag;
  std::vector<NodeMask> ancestors;
  std::vector<double> node_scores;
  double total = 0.0;

  StructureState(Dag d, const ScoreTable& table) : dag(std::move(d)) {
    ancestors = ancestor_masks(dag);
    const int n = dag.node_count();
    node_scores.resize(n);
    total = 0.0;
    for (int i = 0; i < n; ++i) {
      node_scores[i] = table.log_score(i, dag.parents(i));
      total += node_scores[i];
    }
  }

  void rescore_node(int i, const ScoreTable& table) {
    node_scores[i] = table.log_score(i, dag.parents(i));
    total = 0.0;
    for (double s : node_scores) total += s;
  }
};

enum class EdgeMoveKind { kDelete, kAdd, kReverse };

struct EdgeMove {
  EdgeMoveKind kind;
  Edge edge;
};

/// Applies the single-edge change to a copy of the graph.
Dag apply_edge_move(const Dag& dag, const EdgeMove& move) {
  Dag next = dag;
  switch (move.kind) {
    case EdgeMoveKind::kDelete:
      next.remove_edge(move.edge.parent, move.edge.child);
      break;
    case EdgeMoveKind::kAdd:
      next.add_edge(move.edge.parent, move.edge.child);
      break;
    case EdgeMoveKind::kReverse:
      next.remove_edge(move.edge.parent, move.edge.child);
      next.add_edge(move.edge.child, move.edge.parent);
      break;
  }
  return next;
}

/// One MH transition on the state; returns true when the proposal was
/// accepted (the self-move counts as accepted but changes nothing).
bool structure_transition(StructureState& state, const ScoreTable& table,
                          const ChainConfig& config, Rng& rng, MoveStats& stats) {
  const StructureNeighborhood nbd = structure_neighborhood(
      state.dag, state.ancestors, table.max_parents(), config.include_reversals);
  const long long size = nbd.size();
  const long long pick = uniform_index(rng, size);
  const long long deletions = static_cast<long long>(nbd.deletions.size());
  const long long additions = static_cast<long long>(nbd.additions.size());
  const long long reversals = static_cast<long long>(nbd.reversals.size());

  if (pick >= deletions + additions + reversals) return false;  // self-move

  EdgeMove move;
  if (pick < deletions) {
    move = {EdgeMoveKind::kDelete, nbd.deletions[pick]};
  } else if (pick < deletions + additions) {
    move = {EdgeMoveKind::kAdd, nbd.additions[pick - deletions]};
  } else {
    move = {EdgeMoveKind::kReverse, nbd.reversals[pick - deletions - additions]};
  }
  ++stats.structure.attempted;

  const Dag proposal = apply_edge_move(state.dag, move);
  std::vector<NodeMask> proposal_anc;
  if (move.kind == EdgeMoveKind::kAdd) {
    proposal_anc =
        ancestor_masks_after_edge_add(state.ancestors, move.edge.parent, move.edge.child);
  } else {
    proposal_anc = ancestor_masks(proposal);
  }
  const StructureNeighborhood proposal_nbd = structure_neighborhood(
      proposal, proposal_anc, table.max_parents(), config.include_reversals);

  double delta = 0.0;
  const int child = move.edge.child;
  const int parent = move.edge.parent;
  delta += table.log_score(child, proposal.parents(child)) - state.node_scores[child];
  stats.rescored_nodes += 1;
  if (move.kind == EdgeMoveKind::kReverse) {
    delta += table.log_score(parent, proposal.parents(parent)) - state.node_scores[parent];
    stats.rescored_nodes += 1;
  }

  const double log_ratio = std::log(static_cast<double>(size)) -
                           std::log(static_cast<double>(proposal_nbd.size())) + delta;
  if (std::log(uniform_real(rng)) < log_ratio) {
    state.dag = proposal;
    state.ancestors = std::move(proposal_anc);
    state.rescore_node(child, table);
    if (move.kind == EdgeMoveKind::kReverse) state.rescore_node(parent, table);
    ++stats.structure.accepted;
    return true;
  }
  return false;
}

}  // namespace

Dag structure_step(const Dag& state, const ScoreTable& table,
                   const ChainConfig& config, Rng& rng) {
  StructureState s(state, table);
  MoveStats stats;
  structure_transition(s, table, config, rng, stats);
  return s.dag;
}

ChainTrace run_structure_chain(const Dag& init, const ScoreTable& table,
                               const ChainConfig& config) {
  config.validate();
  if (init.node_count() != table.variable_count())
    throw std::invalid_argument("structure chain: init size does not match table");
  for (int i = 0; i < init.node_count(); ++i) {
    if (init.parent_count(i) > table.max_parents())
      throw std::invalid_argument("structure chain: init exceeds the parent limit");
  }

  Rng rng(config.seed);
  StructureState state(init, table);
  ChainTrace trace;
  trace.best_state_log_score = state.total;
  trace.best_dag_log_score = state.total;

  for (long long t = 0; t < config.steps; ++t) {
    if (t % config.thin == 0) {
      TraceRecord rec;
      rec.step = t;
      rec.state_log_score = state.total;
      rec.dag_log_score = state.total;  // the state is the sampled DAG
      if (config.record_dags) rec.dag = state.dag;
      trace.records.push_back(std::move(rec));
    }

    const double u = uniform_real(rng);
    if (u < config.p_rev) {
      ++trace.stats.rev.attempted;
      const RevOutcome outcome = rev_step(state.dag, table, rng);
      if (outcome == RevOutcome::kAccepted) {
        ++trace.stats.rev.accepted;
        state.ancestors = ancestor_masks(state.dag);
        for (int i = 0; i < state.dag.node_count(); ++i) state.rescore_node(i, table);
        trace.stats.rescored_nodes += 2;
      }
    } else {
      structure_transition(state, table, config, rng, trace.stats);
    }

    if (state.total > trace.best_state_log_score) {
      trace.best_state_log_score = state.total;
      trace.best_dag_log_score = state.total;
    }
  }
  return trace;
}

}  // namespace dagmcmc
