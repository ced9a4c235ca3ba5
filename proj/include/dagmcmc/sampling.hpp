#ifndef DAGMCMC_SAMPLING_HPP
#define DAGMCMC_SAMPLING_HPP

#include <optional>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc {

struct ParentDraw {
  NodeMask parents = 0;
  double log_normalizer = 0.0;
};

/// Draws one parent set for `node` among the tabulated sets that avoid
/// `banned` (and hit `required_any` when non-zero), with probability
/// proportional to its score. Returns nullopt when no set qualifies.
std::optional<ParentDraw> draw_parent_set(const ScoreTable& table, int node,
                                          NodeMask banned, NodeMask required_any,
                                          Rng& rng);

struct BestParentSet {
  NodeMask parents = 0;
  double log_score = 0.0;
};

/// Highest-scoring admissible parent set under the same constraints.
std::optional<BestParentSet> max_constrained_log_score(const ScoreTable& table,
                                                       int node, NodeMask banned,
                                                       NodeMask required_any);

}  // namespace dagmcmc

#endif
