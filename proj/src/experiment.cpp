#include "dagmcmc/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <json.hpp>
#include <stdexcept>
#include <thread>

#include "dagmcmc/order_mcmc.hpp"
#include "dagmcmc/partition_mcmc.hpp"
#include "dagmcmc/structure_mcmc.hpp"
#include "dagmcmc/text_io.hpp"

namespace dagmcmc {

Sampler sampler_from_name(const std::string& name) {
  if (name == "structure") return Sampler::kStructure;
  if (name == "structure-rev") return Sampler::kStructureRev;
  if (name == "order") return Sampler::kOrder;
  if (name == "partition") return Sampler::kPartition;
  if (name == "partition-rev") return Sampler::kPartitionRev;
  throw std::invalid_argument(
      "unknown sampler \"" + name +
      "\"; expected structure, structure-rev, order, partition or partition-rev");
}

std::string sampler_name(Sampler sampler) {
  switch (sampler) {
    case Sampler::kStructure: return "structure";
    case Sampler::kStructureRev: return "structure-rev";
    case Sampler::kOrder: return "order";
    case Sampler::kPartition: return "partition";
    case Sampler::kPartitionRev: return "partition-rev";
  }
  return "unknown";
}

namespace {

ChainConfig chain_config(const ExperimentSpec& spec, int chain_index) {
  ChainConfig config;
  config.steps = spec.steps;
  config.seed = spec.base_seed + static_cast<std::uint64_t>(chain_index);
  config.thin = spec.thin;
  config.burn_in_fraction = spec.burn_in_fraction;
  config.record_dags = true;
  const bool rev =
      spec.sampler == Sampler::kStructureRev || spec.sampler == Sampler::kPartitionRev;
  config.p_rev = rev ? spec.p_rev : 0.0;
  return config;
}

ChainTrace run_one_chain(const ScoreTable& table, const ExperimentSpec& spec,
                         int chain_index) {
  const ChainConfig config = chain_config(spec, chain_index);
  const int n = table.variable_count();
  switch (spec.sampler) {
    case Sampler::kStructure:
    case Sampler::kStructureRev:
      return run_structure_chain(Dag::empty(n), table, config);
    case Sampler::kOrder: {
      // The initial order is a uniform draw from the chain's own stream.
      Rng init_rng(config.seed);
      return run_order_chain(NodeOrder::random(n, init_rng), table, config);
    }
    case Sampler::kPartition:
    case Sampler::kPartitionRev:
      return run_partition_chain(LabelledPartition::single_element(n), table, config);
  }
  throw std::logic_error("unreachable sampler");
}

void write_outputs(const ScoreTable& table, const ExperimentSpec& spec,
                   const ExperimentResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(spec.output_dir);
  fs::create_directories(dir);

  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    write_trace_csv((dir / ("trace_" + std::to_string(i) + ".csv")).string(),
                    result.traces[i]);
    write_trace_dags((dir / ("dags_" + std::to_string(i) + ".txt")).string(),
                     result.traces[i]);
  }

  std::ofstream best((dir / "best_scores.csv").string());
  if (!best) throw std::runtime_error("cannot write best_scores.csv");
  best << "chain,seed,best_state_log_score,best_dag_log_score\n";
  char buf[160];
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%llu,%.17g,%.17g\n", i,
                  static_cast<unsigned long long>(spec.base_seed + i),
                  result.traces[i].best_state_log_score,
                  result.traces[i].best_dag_log_score);
    best << buf;
  }

  write_edge_posterior_csv((dir / "edge_posterior.csv").string(), result.edge_posterior);

  nlohmann::json manifest;
  manifest["tool"] = "dagmcmc";
  manifest["version"] = "0.1.0";
  manifest["sampler"] = sampler_name(spec.sampler);
  manifest["n"] = table.variable_count();
  manifest["max_parents"] = table.max_parents();
  manifest["steps"] = spec.steps;
  manifest["chains"] = spec.chains;
  manifest["base_seed"] = spec.base_seed;
  manifest["thin"] = spec.thin;
  manifest["burn_in_fraction"] = spec.burn_in_fraction;
  manifest["p_rev"] = spec.p_rev;
  manifest["wall_seconds"] = result.wall_seconds;
  std::ofstream mout((dir / "manifest.json").string());
  mout << manifest.dump(2) << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ScoreTable& table, const ExperimentSpec& spec) {
  if (spec.chains < 1) throw std::invalid_argument("experiment: chains must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult result;
  result.traces.resize(spec.chains);
  int threads = spec.threads > 0 ? spec.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  if (threads == 1 || spec.chains == 1) {
    for (int i = 0; i < spec.chains; ++i) result.traces[i] = run_one_chain(table, spec, i);
  } else {
    std::vector<std::future<ChainTrace>> futures;
    futures.reserve(spec.chains);
    for (int i = 0; i < spec.chains; ++i) {
      futures.push_back(std::async(std::launch::async,
                                   [&table, &spec, i] { return run_one_chain(table, spec, i); }));
    }
    for (int i = 0; i < spec.chains; ++i) result.traces[i] = futures[i].get();
  }

  result.edge_posterior = edge_posterior_from_traces(
      result.traces, table.variable_count(), spec.steps, spec.burn_in_fraction);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!spec.output_dir.empty()) write_outputs(table, spec, result);
  return result;
}

ExperimentResult run_experiment(const DataSet& data, const ExperimentSpec& spec) {
  const int n = data.variable_count();
  const int k = spec.max_parents < 0 ? n - 1 : spec.max_parents;
  const ScoreTable table = build_score_table(data, k);
  return run_experiment(table, spec);
}

}  // namespace dagmcmc
