#include "dagmcmc/order_mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dagmcmc/logsumexp.hpp"
#include "dagmcmc/sampling.hpp"

namespace dagmcmc {

NodeOrder NodeOrder::identity(int n) {
  NodeOrder o;
  o.nodes.resize(n);
  std::iota(o.nodes.begin(), o.nodes.end(), 0);
  return o;
}

NodeOrder NodeOrder::random(int n, Rng& rng) {
  NodeOrder o = identity(n);
  for (int i = n - 1; i > 0; --i) {
    const long long j = uniform_index(rng, i + 1);
    std::swap(o.nodes[i], o.nodes[j]);
  }
  return o;
}

void NodeOrder::validate() const {
  const int n = node_count();
  if (n < 1 || n > kMaxNodes) throw std::invalid_argument("order: bad node count");
  NodeMask seen = 0;
  for (int v : nodes) {
    if (v < 0 || v >= n || (seen & node_bit(v)))
      throw std::invalid_argument("order: not a permutation of 0..n-1");
    seen |= node_bit(v);
  }
}

double global_move_weight(int n) {
  if (n <= 3) return 1.0;
  const double w = 6.0 * n / (static_cast<double>(n) * n + 10.0 * n - 24.0);
  return std::clamp(w, 0.0, 1.0);
}

namespace {

/// banned[i] = nodes at positions before i.
std::vector<NodeMask> banned_prefixes(const NodeOrder& order) {
  const int n = order.node_count();
  std::vector<NodeMask> banned(n, 0);
  NodeMask before = 0;
  for (int i = 0; i < n; ++i) {
    banned[i] = before;
    before |= node_bit(order.nodes[i]);
  }
  return banned;
}

}  // namespace

double order_log_score(const NodeOrder& order, const ScoreTable& table) {
  order.validate();
  const std::vector<NodeMask> banned = banned_prefixes(order);
  double total = 0.0;
  for (int i = 0; i < order.node_count(); ++i) {
    // The empty set is always permitted, so the sum always exists.
    total += *constrained_log_score_sum(table, order.nodes[i], banned[i], 0);
  }
  return total;
}

OrderProposal propose_order_move(const NodeOrder& order, Rng& rng) {
  const int n = order.node_count();
  if (n < 2) throw std::invalid_argument("order move: need at least two nodes");
  OrderProposal out;
  out.order = order;
  if (uniform_real(rng) < global_move_weight(n)) {
    out.global = true;
    // Uniform unordered pair of distinct positions.
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    long long k = uniform_index(rng, pairs);
    int a = 0;
    while (k >= n - 1 - a) {
      k -= n - 1 - a;
      ++a;
    }
    out.position_low = a;
    out.position_high = a + 1 + static_cast<int>(k);
  } else {
    out.global = false;
    out.position_low = static_cast<int>(uniform_index(rng, n - 1));
    out.position_high = out.position_low + 1;
  }
  std::swap(out.order.nodes[out.position_low], out.order.nodes[out.position_high]);
  for (int i = out.position_low; i <= out.position_high; ++i)
    out.rescored |= node_bit(out.order.nodes[i]);
  return out;
}

Dag sample_dag_from_order(const NodeOrder& order, const ScoreTable& table, Rng& rng) {
  const std::vector<NodeMask> banned = banned_prefixes(order);
  const int n = order.node_count();
  std::vector<NodeMask> parents(n, 0);
  for (int i = 0; i < n; ++i) {
    const int node = order.nodes[i];
    parents[node] = draw_parent_set(table, node, banned[i], 0, rng)->parents;
  }
  return Dag::from_parent_masks(std::move(parents));
}

ChainTrace run_order_chain(const NodeOrder& init, const ScoreTable& table,
                           const ChainConfig& config) {
  config.validate();
  init.validate();
  if (init.node_count() != table.variable_count())
    throw std::invalid_argument("order chain: init size does not match table");

  Rng rng(config.seed);
  NodeOrder order = init;
  const int n = order.node_count();
  std::vector<NodeMask> banned = banned_prefixes(order);
  std::vector<double> position_scores(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    position_scores[i] = *constrained_log_score_sum(table, order.nodes[i], banned[i], 0);
    total += position_scores[i];
  }

  ChainTrace trace;
  trace.best_state_log_score = total;
  trace.best_dag_log_score = kNegInf;

  for (long long t = 0; t < config.steps; ++t) {
    if (t % config.thin == 0) {
      TraceRecord rec;
      rec.step = t;
      rec.state_log_score = total;
      Dag dag = sample_dag_from_order(order, table, rng);
      rec.dag_log_score = dag_log_score(dag, table);
      if (rec.dag_log_score > trace.best_dag_log_score)
        trace.best_dag_log_score = rec.dag_log_score;
      if (config.record_dags) rec.dag = std::move(dag);
      trace.records.push_back(std::move(rec));
    }

    if (n < 2 || uniform_real(rng) < config.stay_still_prob) {
      ++trace.stats.stays;
    } else {
      OrderProposal proposal = propose_order_move(order, rng);
      MoveCounter& counter =
          proposal.global ? trace.stats.swap_global : trace.stats.swap_adjacent;
      ++counter.attempted;

      const std::vector<NodeMask> new_banned = banned_prefixes(proposal.order);
      double delta = 0.0;
      std::vector<double> new_scores(position_scores);
      for (int i = proposal.position_low; i <= proposal.position_high; ++i) {
        new_scores[i] =
            *constrained_log_score_sum(table, proposal.order.nodes[i], new_banned[i], 0);
        delta += new_scores[i] - position_scores[i];
        ++trace.stats.rescored_nodes;
      }
      if (std::log(uniform_real(rng)) < delta) {
        ++counter.accepted;
        order = std::move(proposal.order);
        banned = new_banned;
        position_scores = std::move(new_scores);
        total += delta;
      }
    }

    if (total > trace.best_state_log_score) trace.best_state_log_score = total;
  }
  return trace;
}

}  // namespace dagmcmc
