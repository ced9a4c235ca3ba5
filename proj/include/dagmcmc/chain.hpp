#ifndef DAGMCMC_CHAIN_HPP
#define DAGMCMC_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dagmcmc/dag.hpp"

namespace dagmcmc {

using Rng = std::mt19937_64;

inline double uniform_real(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// Uniform integer in [0, count).
inline long long uniform_index(Rng& rng, long long count) {
  return std::uniform_int_distribution<long long>(0, count - 1)(rng);
}

struct ChainConfig {
  long long steps = 1000;
  std::uint64_t seed = 0;
  double stay_still_prob = 0.01;  // order and partition chains
  bool include_reversals = true;  // structure neighbourhood edge reversals
  double p_rev = 0.0;             // probability of the resampling reversal move
  long long thin = 1;
  double burn_in_fraction = 0.0;  // applied when summarising, not when recording
  bool record_dags = true;

  void validate() const;
};

struct MoveCounter {
  long long attempted = 0;
  long long accepted = 0;
};

struct MoveStats {
  MoveCounter structure;
  MoveCounter rev;
  MoveCounter basic;
  MoveCounter relocation;
  MoveCounter swap_global;
  MoveCounter swap_adjacent;
  long long stays = 0;
  long long rescored_nodes = 0;
};

struct TraceRecord {
  long long step = 0;
  double state_log_score = 0.0;
  double dag_log_score = 0.0;
  std::optional<Dag> dag;
};

/// Scores and thinned samples from one chain. Records are taken every
/// `thin` steps, before the transition at that step, so the first record
/// is always the initial state.
struct ChainTrace {
  std::vector<TraceRecord> records;
  MoveStats stats;
  double best_state_log_score = 0.0;
  double best_dag_log_score = 0.0;

  /// Records with step >= burn_in_fraction * steps.
  std::vector<const TraceRecord*> post_burn_in(long long steps,
                                               double burn_in_fraction) const;
};

/// Mean adjacency matrix [child][parent] over the recorded post-burn-in
/// DAGs of several traces. Throws if no record survives the burn-in.
std::vector<std::vector<double>> edge_posterior_from_traces(
    const std::vector<ChainTrace>& traces, int n, long long steps,
    double burn_in_fraction);

}  // namespace dagmcmc

#endif
