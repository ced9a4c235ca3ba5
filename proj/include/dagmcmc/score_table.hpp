#ifndef DAGMCMC_SCORE_TABLE_HPP
#define DAGMCMC_SCORE_TABLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "dagmcmc/bge.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/data.hpp"

namespace dagmcmc {

struct ScoreEntry {
  NodeMask parents = 0;
  double log_score = 0.0;
};

/// Per-node log scores of every parent set of size at most max_parents,
/// stored in ascending mask order. Immutable after construction and safe to
/// share read-only between chains.
class ScoreTable {
 public:
  ScoreTable() = default;
  ScoreTable(int n, int max_parents, std::vector<std::vector<ScoreEntry>> entries);

  int variable_count() const { return n_; }
  int max_parents() const { return max_parents_; }
  std::span<const ScoreEntry> entries(int node) const { return per_node_[node]; }

  /// Tabulated score; throws if the set exceeds max_parents.
  double log_score(int node, NodeMask parents) const;

 private:
  int n_ = 0;
  int max_parents_ = 0;
  std::vector<std::vector<ScoreEntry>> per_node_;
};

/// Scores every admissible parent set of every node. Fails fast on
/// degenerate data (a constant column, or too few observations for the
/// requested parent limit) with a diagnostic naming the offending column.
ScoreTable build_score_table(const DataSet& data, int max_parents,
                             const BgeParams& params);

ScoreTable build_score_table(const DataSet& data, int max_parents);

/// Table with the same log score for every entry; used for uniform-over-DAG
/// sampling and as an injectable stand-in score.
ScoreTable uniform_score_table(int n, int max_parents, double log_score = 0.0);

/// Sum of tabulated node scores over the graph.
double dag_log_score(const Dag& dag, const ScoreTable& table);

/// log sum of scores over parent sets of `node` that avoid `banned` and,
/// when `required_any` is non-zero, hit it in at least one member.
/// Returns nullopt when no parent set qualifies (possible only for
/// non-empty `required_any` with max_parents == 0).
std::optional<double> constrained_log_score_sum(const ScoreTable& table, int node,
                                                NodeMask banned, NodeMask required_any);

}  // namespace dagmcmc

#endif
