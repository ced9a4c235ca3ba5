#include "dagmcmc/simulate.hpp"

#include <stdexcept>

#include "dagmcmc/partition.hpp"

namespace dagmcmc {

DataSet simulate_data(const SimulationSpec& spec, Rng& rng) {
  if (spec.observations < 1)
    throw std::invalid_argument("simulate: need at least one observation");
  const int n = spec.dag.node_count();
  const int N = spec.observations;

  Eigen::MatrixXd values(N, n);
  std::normal_distribution<double> noise(0.0, spec.noise_sd);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < n; ++j) values(i, j) = noise(rng);

  // Accumulate parent contributions in topological order; the outpoint
  // rounds of the decomposition are read right to left.
  const LabelledPartition layers = outpoint_decomposition(spec.dag);
  for (int e = layers.element_count() - 1; e >= 0; --e) {
    for (int node : layers.element(e)) {
      for_each_node(spec.dag.parents(node), [&](int parent) {
        values.col(node) += spec.coefficient * values.col(parent);
      });
    }
  }
  return make_dataset(std::move(values));
}

Dag generate_random_dag(int n, int max_parents, Rng& rng) {
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("generate_random_dag: n must be in [1, 64]");
  if (max_parents < 0 || max_parents > n - 1)
    throw std::invalid_argument("generate_random_dag: max_parents must be in [0, n-1]");

  // Strictly lower-triangular Bernoulli(1/2) parent rows.
  std::vector<NodeMask> parents(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (uniform_real(rng) < 0.5) parents[i] |= node_bit(j);
    }
  }
  // Thin overfull rows by deleting uniformly chosen entries.
  for (int i = 0; i < n; ++i) {
    while (popcount(parents[i]) > max_parents) {
      std::vector<int> current;
      for_each_node(parents[i], [&](int p) { current.push_back(p); });
      const long long drop = uniform_index(rng, static_cast<long long>(current.size()));
      parents[i] &= ~node_bit(current[drop]);
    }
  }
  // Relabel by a uniform permutation sigma: new node sigma(i) inherits row i.
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const long long j = uniform_index(rng, i + 1);
    std::swap(sigma[i], sigma[j]);
  }
  std::vector<NodeMask> permuted(n, 0);
  for (int i = 0; i < n; ++i) {
    NodeMask row = 0;
    for_each_node(parents[i], [&](int p) { row |= node_bit(sigma[p]); });
    permuted[sigma[i]] = row;
  }
  return Dag::from_parent_masks(std::move(permuted));
}

}  // namespace dagmcmc
