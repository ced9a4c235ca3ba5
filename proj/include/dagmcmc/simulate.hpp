#ifndef DAGMCMC_SIMULATE_HPP
#define DAGMCMC_SIMULATE_HPP

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/data.hpp"

namespace dagmcmc {

/// Linear-Gaussian generator: in topological order, each node is
/// `coefficient` times the sum of its parents' values plus centred Gaussian
/// noise, so root nodes are plain draws from N(0, noise_sd^2).
struct SimulationSpec {
  Dag dag;
  int observations = 100;
  double coefficient = 2.0;
  double noise_sd = 1.0;
};

DataSet simulate_data(const SimulationSpec& spec, Rng& rng);

/// Random DAG in the shape used for benchmark data: a uniform 0/1 strictly
/// lower-triangular parent matrix, thinned per node down to max_parents by
/// deleting random entries, then relabelled by a uniform permutation.
Dag generate_random_dag(int n, int max_parents, Rng& rng);

}  // namespace dagmcmc

#endif
