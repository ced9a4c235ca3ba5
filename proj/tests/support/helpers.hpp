#ifndef DAGMCMC_TEST_HELPERS_HPP
#define DAGMCMC_TEST_HELPERS_HPP

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/dag.hpp"
#include "dagmcmc/data.hpp"
#include "dagmcmc/score_table.hpp"

namespace dagmcmc::test {

/// Graph from (parent, child) pairs, 0-based.
inline Dag make_dag(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<NodeMask> parents(n, 0);
  for (const auto& [p, c] : edges) parents[c] |= node_bit(p);
  return Dag::from_parent_masks(std::move(parents));
}

/// Cycle test by depth-first search on an adjacency list; independent of
/// the mask-based implementation under test.
inline bool dfs_has_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> children(n);
  for (const auto& [p, c] : edges) children[p].push_back(c);
  std::vector<int> color(n, 0);  // 0 unvisited, 1 on stack, 2 done
  bool cycle = false;
  auto visit = [&](auto&& self, int v) -> void {
    color[v] = 1;
    for (int c : children[v]) {
      if (cycle) return;
      if (color[c] == 1) {
        cycle = true;
        return;
      }
      if (color[c] == 0) self(self, c);
    }
    color[v] = 2;
  };
  for (int v = 0; v < n && !cycle; ++v) {
    if (color[v] == 0) visit(visit, v);
  }
  return cycle;
}

/// Transitive closure by repeated boolean matrix multiplication.
inline std::vector<std::vector<bool>> closure_by_matrix_power(const Dag& dag) {
  const int n = dag.node_count();
  // reach[i][j] = path j -> i of length >= 1 (j ancestor of i).
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reach[i][j] = dag.has_edge(j, i);
  for (int round = 0; round < n; ++round) {
    auto next = reach;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (reach[i][k])
          for (int j = 0; j < n; ++j)
            if (reach[k][j]) next[i][j] = true;
    reach = std::move(next);
  }
  return reach;
}

/// Deterministic strictly-positive stand-in score table with entry scores
/// spread over a few log units; independent of any data.
inline ScoreTable arbitrary_score_table(int n, int max_parents, std::uint64_t seed = 7) {
  ScoreTable base = uniform_score_table(n, max_parents, 0.0);
  Rng rng(seed);
  std::vector<std::vector<ScoreEntry>> entries(n);
  for (int node = 0; node < n; ++node) {
    for (const ScoreEntry& e : base.entries(node)) {
      entries[node].push_back({e.parents, 3.0 * (uniform_real(rng) - 0.5)});
    }
  }
  return ScoreTable(n, max_parents, std::move(entries));
}

/// Small well-conditioned Gaussian dataset for scoring tests.
inline DataSet toy_dataset(int n, int rows, std::uint64_t seed = 11) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd values(rows, n);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < n; ++j) values(i, j) = normal(rng);
  return make_dataset(std::move(values));
}

}  // namespace dagmcmc::test

#endif
