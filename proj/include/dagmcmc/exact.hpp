#ifndef DAGMCMC_EXACT_HPP
#define DAGMCMC_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "dagmcmc/dag.hpp"
#include "dagmcmc/partition.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

using BigInt = boost::multiprecision::cpp_int;

/// All labelled DAGs on n nodes with in-degree at most max_parents.
/// Guarded to n <= 6; n = 6 already enumerates 2^30 candidate graphs.
std::vector<Dag> enumerate_dags(int n, int max_parents);

/// Number of labelled DAGs on n nodes, by the alternating recursion over
/// outpoint counts a_n = sum_k (-1)^(k+1) C(n,k) 2^(k(n-k)) a_(n-k).
BigInt count_dags(int n);

/// Number of DAGs whose outpoint decomposition has the given element sizes,
///   n!/(k_1! ... k_m!) * prod (2^(k_{j+1})-1)^(k_j) * prod 2^(k_j S_{j+2}).
BigInt count_dags_in_partition(std::span<const int> lambda);

/// The same count for one fixed assignment of labels to elements, i.e.
/// count_dags_in_partition without the leading multinomial factor.
BigInt count_dags_per_labelling(std::span<const int> lambda);

/// All ordered integer compositions of n (the possible lambda vectors).
std::vector<std::vector<int>> enumerate_compositions(int n);

/// All labelled partitions of {0..n-1}; guarded to n <= 8.
std::vector<LabelledPartition> enumerate_labelled_partitions(int n);

/// Number of node orders the DAG is consistent with (parents always later
/// in the order); guarded to n <= 8.
long long count_linear_extensions(const Dag& dag);

/// Exhaustively normalised posterior over all DAGs with the table's parent
/// limit, plus the implied directed-edge marginals. Guarded to n <= 5.
struct PosteriorTable {
  std::vector<Dag> dags;
  std::vector<double> probabilities;            // same order as dags
  std::vector<std::vector<double>> edge_marginals;  // [child][parent]

  const Dag& mode() const;
};

PosteriorTable exact_posterior(const ScoreTable& table);

}  // namespace dagmcmc

#endif
