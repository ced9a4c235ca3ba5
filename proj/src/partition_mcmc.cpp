#include "dagmcmc/partition_mcmc.hpp"

#include <cmath>
#include <stdexcept>

#include "dagmcmc/edge_reversal.hpp"
#include "dagmcmc/logsumexp.hpp"
#include "dagmcmc/order_mcmc.hpp"
#include "dagmcmc/sampling.hpp"

namespace dagmcmc {

double partition_log_score(const LabelledPartition& part, const ScoreTable& table) {
  const std::vector<NodeConstraints> constraints = partition_constraints(part);
  double total = 0.0;
  for (int v = 0; v < part.node_count(); ++v) {
    const auto s =
        constrained_log_score_sum(table, v, constraints[v].banned, constraints[v].required_any);
    if (!s) return kNegInf;
    total += *s;
  }
  return total;
}

Dag sample_dag_from_partition(const LabelledPartition& part, const ScoreTable& table,
                              Rng& rng) {
  const std::vector<NodeConstraints> constraints = partition_constraints(part);
  const int n = part.node_count();
  std::vector<NodeMask> parents(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto draw =
        draw_parent_set(table, v, constraints[v].banned, constraints[v].required_any, rng);
    if (!draw)
      throw std::invalid_argument("sample_dag_from_partition: partition has score zero");
    parents[v] = draw->parents;
  }
  return Dag::from_parent_masks(std::move(parents));
}

namespace {

/// Cached per-node constraint masks and score sums for the current state.
/// A proposal is evaluated by diffing constraint masks and rescoring only
/// the nodes whose masks changed.
struct PartitionState {
  LabelledPartition part;
  std::vector<NodeConstraints> constraints;
  std::vector<double> node_scores;
  double total = kNegInf;

  PartitionState(LabelledPartition p, const ScoreTable& table) : part(std::move(p)) {
    rebuild(table);
  }

  void rebuild(const ScoreTable& table) {
    constraints = partition_constraints(part);
    const int n = part.node_count();
    node_scores.assign(n, kNegInf);
    total = 0.0;
    for (int v = 0; v < n; ++v) {
      const auto s = constrained_log_score_sum(table, v, constraints[v].banned,
                                               constraints[v].required_any);
      if (!s) {
        total = kNegInf;
        return;
      }
      node_scores[v] = *s;
      total += node_scores[v];
    }
  }

  struct Evaluation {
    std::vector<NodeConstraints> constraints;
    std::vector<std::pair<int, double>> changed;  // node -> new score
    double total = kNegInf;
    int rescored = 0;
  };

  Evaluation evaluate(const LabelledPartition& proposal, const ScoreTable& table) const {
    Evaluation ev;
    ev.constraints = partition_constraints(proposal);
    double new_total = total;
    for (int v = 0; v < part.node_count(); ++v) {
      if (ev.constraints[v] == constraints[v]) continue;
      ++ev.rescored;
      const auto s = constrained_log_score_sum(table, v, ev.constraints[v].banned,
                                               ev.constraints[v].required_any);
      if (!s) {
        ev.total = kNegInf;
        return ev;
      }
      ev.changed.emplace_back(v, *s);
      new_total += *s - node_scores[v];
    }
    ev.total = new_total;
    return ev;
  }

  void apply(LabelledPartition proposal, Evaluation ev) {
    part = std::move(proposal);
    constraints = std::move(ev.constraints);
    for (const auto& [v, s] : ev.changed) node_scores[v] = s;
    // Re-sum instead of trusting the accumulated delta.
    total = 0.0;
    for (double s : node_scores) total += s;
  }
};

}  // namespace

ChainTrace run_partition_chain(const LabelledPartition& init, const ScoreTable& table,
                               const ChainConfig& config) {
  config.validate();
  const int n = table.variable_count();
  if (init.node_count() != n)
    throw std::invalid_argument("partition chain: init size does not match table");
  if (n > 48)
    throw std::invalid_argument("partition chain: supported up to 48 nodes");

  Rng rng(config.seed);
  PartitionState state(init, table);
  if (state.total == kNegInf)
    throw std::invalid_argument("partition chain: initial partition has score zero");

  const double w_large = global_move_weight(n);
  ChainTrace trace;
  trace.best_state_log_score = state.total;
  trace.best_dag_log_score = kNegInf;

  enum class Family { kBasic, kRelocation, kSwapGlobal, kSwapAdjacent };

  for (long long t = 0; t < config.steps; ++t) {
    if (t % config.thin == 0) {
      TraceRecord rec;
      rec.step = t;
      rec.state_log_score = state.total;
      Dag dag = sample_dag_from_partition(state.part, table, rng);
      rec.dag_log_score = dag_log_score(dag, table);
      if (rec.dag_log_score > trace.best_dag_log_score)
        trace.best_dag_log_score = rec.dag_log_score;
      if (config.record_dags) rec.dag = std::move(dag);
      trace.records.push_back(std::move(rec));
    }

    const double branch = uniform_real(rng);
    if (branch < config.stay_still_prob) {
      ++trace.stats.stays;
    } else if (config.p_rev > 0.0 &&
               branch < config.stay_still_prob +
                            (1.0 - config.stay_still_prob) * config.p_rev) {
      ++trace.stats.rev.attempted;
      RevOutcome outcome = RevOutcome::kNoEdge;
      LabelledPartition next = rev_partition_step(state.part, table, rng, &outcome);
      if (outcome == RevOutcome::kAccepted) {
        ++trace.stats.rev.accepted;
        // The decomposition of the accepted DAG may be any partition;
        // everything is rescored from scratch.
        state = PartitionState(std::move(next), table);
        trace.stats.rescored_nodes += n;
      }
    } else {
      Family family;
      if (uniform_real(rng) < 0.6) {
        family = (uniform_real(rng) < w_large) ? Family::kRelocation : Family::kBasic;
      } else {
        family = (uniform_real(rng) < w_large) ? Family::kSwapGlobal : Family::kSwapAdjacent;
      }

      LabelledPartition proposal;
      double log_proposal_ratio = 0.0;  // log q(cur|prop) - log q(prop|cur)
      bool have_proposal = false;

      switch (family) {
        case Family::kBasic: {
          ++trace.stats.basic.attempted;
          proposal = propose_basic_move(state.part, rng);
          const long long size_cur = basic_neighborhood_size(state.part.sizes());
          const long long size_prop = basic_neighborhood_size(proposal.sizes());
          log_proposal_ratio = std::log(static_cast<double>(size_cur)) -
                               std::log(static_cast<double>(size_prop));
          have_proposal = true;
          break;
        }
        case Family::kRelocation: {
          if (n >= 2) {
            ++trace.stats.relocation.attempted;
            proposal = propose_relocation(state.part, rng);
            const long long size_cur = relocation_neighborhood_size(state.part.sizes());
            const long long size_prop = relocation_neighborhood_size(proposal.sizes());
            const long long mult_fwd = relocation_multiplicity(state.part, proposal);
            const long long mult_bwd = relocation_multiplicity(proposal, state.part);
            log_proposal_ratio =
                std::log(static_cast<double>(mult_bwd) / static_cast<double>(size_prop)) -
                std::log(static_cast<double>(mult_fwd) / static_cast<double>(size_cur));
            have_proposal = true;
          } else {
            ++trace.stats.stays;
          }
          break;
        }
        case Family::kSwapGlobal:
        case Family::kSwapAdjacent: {
          const bool adjacent = family == Family::kSwapAdjacent;
          auto swapped = propose_swap(state.part, adjacent, rng);
          if (swapped) {
            MoveCounter& counter =
                adjacent ? trace.stats.swap_adjacent : trace.stats.swap_global;
            ++counter.attempted;
            proposal = std::move(*swapped);
            log_proposal_ratio = 0.0;  // lambda unchanged, symmetric family
            have_proposal = true;
          } else {
            ++trace.stats.stays;  // single element, no swap available
          }
          break;
        }
      }

      if (have_proposal) {
        PartitionState::Evaluation ev = state.evaluate(proposal, table);
        trace.stats.rescored_nodes += ev.rescored;
        const double log_ratio = log_proposal_ratio + ev.total - state.total;
        if (ev.total != kNegInf && std::log(uniform_real(rng)) < log_ratio) {
          state.apply(std::move(proposal), std::move(ev));
          MoveCounter* counter = nullptr;
          switch (family) {
            case Family::kBasic: counter = &trace.stats.basic; break;
            case Family::kRelocation: counter = &trace.stats.relocation; break;
            case Family::kSwapGlobal: counter = &trace.stats.swap_global; break;
            case Family::kSwapAdjacent: counter = &trace.stats.swap_adjacent; break;
          }
          ++counter->accepted;
        }
      }
    }

    if (state.total > trace.best_state_log_score)
      trace.best_state_log_score = state.total;
  }
  return trace;
}

}  // namespace dagmcmc
