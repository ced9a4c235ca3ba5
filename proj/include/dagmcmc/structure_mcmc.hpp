#ifndef DAGMCMC_STRUCTURE_MCMC_HPP
#define DAGMCMC_STRUCTURE_MCMC_HPP

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

/// One Metropolis-Hastings step of single-edge structure MCMC. The proposal
/// is uniform over the neighbourhood (additions, deletions, optional
/// reversals, plus the current graph itself) and accepted with
///   min{ 1, |nbd(G)| P(G'|D) / (|nbd(G')| P(G|D)) }.
/// Moves that would exceed the table's parent limit are not in the
/// neighbourhood on either side of the ratio.
Dag structure_step(const Dag& state, const ScoreTable& table,
                   const ChainConfig& config, Rng& rng);

/// Runs `config.steps` transitions from `init`, mixing in the resampling
/// edge-reversal move with probability `config.p_rev` per step. Records the
/// state every `config.thin` steps, before the transition at that step.
ChainTrace run_structure_chain(const Dag& init, const ScoreTable& table,
                               const ChainConfig& config);

}  // namespace dagmcmc

#endif
