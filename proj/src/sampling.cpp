#include "dagmcmc/sampling.hpp"

#include <cmath>

#include "dagmcmc/logsumexp.hpp"

namespace dagmcmc {

std::optional<ParentDraw> draw_parent_set(const ScoreTable& table, int node,
                                          NodeMask banned, NodeMask required_any,
                                          Rng& rng) {
  const std::optional<double> log_z =
      constrained_log_score_sum(table, node, banned, required_any);
  if (!log_z) return std::nullopt;
  const double u = uniform_real(rng);
  double cumulative = 0.0;
  const ScoreEntry* last = nullptr;
  for (const ScoreEntry& e : table.entries(node)) {
    if (e.parents & banned) continue;
    if (required_any != 0 && (e.parents & required_any) == 0) continue;
    last = &e;
    cumulative += std::exp(e.log_score - *log_z);
    if (u < cumulative) return ParentDraw{e.parents, *log_z};
  }
  // Rounding can leave the cumulative sum a hair below one.
  return ParentDraw{last->parents, *log_z};
}

std::optional<BestParentSet> max_constrained_log_score(const ScoreTable& table,
                                                       int node, NodeMask banned,
                                                       NodeMask required_any) {
  const ScoreEntry* best = nullptr;
  for (const ScoreEntry& e : table.entries(node)) {
    if (e.parents & banned) continue;
    if (required_any != 0 && (e.parents & required_any) == 0) continue;
    if (best == nullptr || e.log_score > best->log_score) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return BestParentSet{best->parents, best->log_score};
}

}  // namespace dagmcmc
