#ifndef DAGMCMC_TEXT_IO_HPP
#define DAGMCMC_TEXT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/partition.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// Graph text format: a line "n=<count>" followed by n rows of
/// space-separated 0/1 entries, row i listing the parents of node i.
std::string dag_to_text(const Dag& dag);
Dag dag_from_text(const std::string& text);
Dag load_dag_text(const std::string& path);
void save_dag_text(const std::string& path, const Dag& dag);

/// "k1,k2,...|e1;e2;..." with 1-based node labels inside the elements.
std::string partition_to_text(const LabelledPartition& part);

/// Trace rows "step,state_log_score,dag_log_score" plus a sidecar of the
/// recorded DAGs, one graph-text block per record, separated by blank lines.
void write_trace_csv(const std::string& path, const ChainTrace& trace);
void write_trace_dags(const std::string& path, const ChainTrace& trace);

/// Plain numeric matrix, 6-decimal fixed point, entry (i, j) = posterior
/// probability of the edge j -> i.
void write_edge_posterior_csv(const std::string& path,
                              const std::vector<std::vector<double>>& matrix);
std::vector<std::vector<double>> load_edge_posterior_csv(const std::string& path);

/// Rows "node,parent_mask,log_score" with 1-based node ids; bit j-1 of the
/// mask marks node j as a parent. Scores carry 17 significant digits.
void write_score_table_csv(const std::string& path, const ScoreTable& table);

}  // namespace dagmcmc

#endif
