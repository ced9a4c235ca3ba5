#ifndef DAGMCMC_EXPERIMENT_HPP
#define DAGMCMC_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/data.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

enum class Sampler { kStructure, kStructureRev, kOrder, kPartition, kPartitionRev };

Sampler sampler_from_name(const std::string& name);
std::string sampler_name(Sampler sampler);

struct ExperimentSpec {
  Sampler sampler = Sampler::kPartition;
  int max_parents = -1;  // -1 means n - 1
  long long steps = 10000;
  int chains = 1;
  std::uint64_t base_seed = 0;  // chain i runs with base_seed + i
  long long thin = 1;
  double burn_in_fraction = 0.2;
  double p_rev = 0.07;  // used by the -rev samplers
  int threads = 0;      // 0 = hardware concurrency
  std::string output_dir;  // empty = no files written
};

struct ExperimentResult {
  std::vector<ChainTrace> traces;
  std::vector<std::vector<double>> edge_posterior;
  double wall_seconds = 0.0;
};

/// Builds the score table once, runs the configured chains (concurrently
/// when threads allow; outputs are identical either way) and, when an
/// output directory is set, writes per-chain trace CSVs and DAG sidecars,
/// a best-score table, the averaged edge-posterior matrix and a JSON run
/// manifest.
ExperimentResult run_experiment(const DataSet& data, const ExperimentSpec& spec);

ExperimentResult run_experiment(const ScoreTable& table, const ExperimentSpec& spec);

}  // namespace dagmcmc

#endif
