#include "dagmcmc/score_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dagmcmc/logsumexp.hpp"

namespace dagmcmc {

ScoreTable::ScoreTable(int n, int max_parents,
                       std::vector<std::vector<ScoreEntry>> entries)
    : n_(n), max_parents_(max_parents), per_node_(std::move(entries)) {
  if (static_cast<int>(per_node_.size()) != n)
    throw std::invalid_argument("score table: wrong number of nodes");
  for (auto& node_entries : per_node_) {
    std::sort(node_entries.begin(), node_entries.end(),
              [](const ScoreEntry& a, const ScoreEntry& b) { return a.parents < b.parents; });
  }
}

double ScoreTable::log_score(int node, NodeMask parents) const {
  const auto& v = per_node_[node];
  auto it = std::lower_bound(v.begin(), v.end(), parents,
                             [](const ScoreEntry& e, NodeMask m) { return e.parents < m; });
  if (it == v.end() || it->parents != parents) {
    throw std::invalid_argument("score table: node " + std::to_string(node + 1) +
                                " has an untabulated parent set (limit " +
                                std::to_string(max_parents_) + " parents)");
  }
  return it->log_score;
}

namespace {

/// Ascending-mask enumeration of all subsets of `pool` with at most k bits.
template <typename Fn>
void for_each_small_subset(NodeMask pool, int k, Fn&& fn) {
  // Iterating submasks in increasing numeric order: standard trick
  // sub = (sub - pool) & pool steps through them ascending.
  NodeMask sub = 0;
  while (true) {
    if (popcount(sub) <= k) fn(sub);
    if (sub == pool) break;
    sub = (sub - pool) & pool;
  }
}

}  // namespace

ScoreTable build_score_table(const DataSet& data, int max_parents,
                             const BgeParams& params) {
  const int n = data.variable_count();
  if (max_parents < 0 || max_parents > n - 1)
    throw std::invalid_argument("score table: max_parents must be in [0, n-1]");
  if (data.observation_count() <= max_parents + 1)
    throw std::invalid_argument(
        "score table: need more than max_parents + 1 observations, got " +
        std::to_string(data.observation_count()));
  for (int j = 0; j < n; ++j) {
    const double span = data.values.col(j).maxCoeff() - data.values.col(j).minCoeff();
    if (span == 0.0)
      throw std::invalid_argument("score table: column \"" + data.names[j] +
                                  "\" is constant");
  }

  const BgeScorer scorer(data, params);
  std::vector<std::vector<ScoreEntry>> entries(n);
  for (int node = 0; node < n; ++node) {
    const NodeMask pool = full_mask(n) & ~node_bit(node);
    auto& out = entries[node];
    for_each_small_subset(pool, max_parents, [&](NodeMask parents) {
      double s;
      try {
        s = scorer.log_score(node, parents);
      } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string(e.what()) + ", parent mask " +
                                 std::to_string(parents));
      }
      out.push_back({parents, s});
    });
  }
  return ScoreTable(n, max_parents, std::move(entries));
}

ScoreTable build_score_table(const DataSet& data, int max_parents) {
  return build_score_table(data, max_parents, BgeParams::defaults(data));
}

ScoreTable uniform_score_table(int n, int max_parents, double log_score) {
  std::vector<std::vector<ScoreEntry>> entries(n);
  for (int node = 0; node < n; ++node) {
    const NodeMask pool = full_mask(n) & ~node_bit(node);
    for_each_small_subset(pool, max_parents,
                          [&](NodeMask parents) { entries[node].push_back({parents, log_score}); });
  }
  return ScoreTable(n, max_parents, std::move(entries));
}

double dag_log_score(const Dag& dag, const ScoreTable& table) {
  double total = 0.0;
  for (int i = 0; i < dag.node_count(); ++i) total += table.log_score(i, dag.parents(i));
  return total;
}

std::optional<double> constrained_log_score_sum(const ScoreTable& table, int node,
                                                NodeMask banned, NodeMask required_any) {
  double hi = kNegInf;
  for (const ScoreEntry& e : table.entries(node)) {
    if (e.parents & banned) continue;
    if (required_any != 0 && (e.parents & required_any) == 0) continue;
    if (e.log_score > hi) hi = e.log_score;
  }
  if (hi == kNegInf) return std::nullopt;
  double acc = 0.0;
  for (const ScoreEntry& e : table.entries(node)) {
    if (e.parents & banned) continue;
    if (required_any != 0 && (e.parents & required_any) == 0) continue;
    acc += std::exp(e.log_score - hi);
  }
  return hi + std::log(acc);
}

}  // namespace dagmcmc
