#include <doctest.h>

#include <algorithm>
#include <set>

#include "dagmcmc/dag.hpp"
#include "dagmcmc/simulate.hpp"
#include "support/helpers.hpp"

using namespace dagmcmc;
using test::make_dag;

TEST_CASE("is_acyclic on the small canonical graphs") {
  std::vector<NodeMask> empty3(3, 0);
  CHECK(is_acyclic(empty3));

  const Dag chain = make_dag(3, {{0, 1}, {1, 2}});
  CHECK(is_acyclic(chain.parent_masks()));

  std::vector<NodeMask> two_cycle{node_bit(1), node_bit(0)};
  CHECK_FALSE(is_acyclic(two_cycle));

  std::vector<NodeMask> self_loop{node_bit(0)};
  CHECK_THROWS_AS(is_acyclic(self_loop), std::invalid_argument);
  CHECK_THROWS_AS(Dag::from_parent_masks({node_bit(1), node_bit(0)}), std::invalid_argument);
}

TEST_CASE("ancestor masks equal the boolean matrix-power closure") {
  const Dag chain = make_dag(3, {{0, 1}, {1, 2}});
  const auto anc = ancestor_masks(chain);
  CHECK(anc[0] == 0);
  CHECK(anc[1] == node_bit(0));
  CHECK(anc[2] == (node_bit(0) | node_bit(1)));

  const auto empty_anc = ancestor_masks(Dag::empty(4));
  for (NodeMask m : empty_anc) CHECK(m == 0);

  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Dag dag = generate_random_dag(6, 5, rng);
    const auto masks = ancestor_masks(dag);
    const auto reach = test::closure_by_matrix_power(dag);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        CHECK(((masks[i] >> j) & 1) == static_cast<NodeMask>(reach[i][j]));
    // Descendants are the transpose of ancestors.
    const auto desc = descendant_masks(dag);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        CHECK(((desc[i] >> j) & 1) == ((masks[j] >> i) & 1));
  }
}

TEST_CASE("incremental ancestor update after an edge addition") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag dag = generate_random_dag(6, 5, rng);
    const auto anc = ancestor_masks(dag);
    const auto nbd = structure_neighborhood(dag, anc, 5, true);
    for (const Edge& e : nbd.additions) {
      Dag grown = dag;
      grown.add_edge(e.parent, e.child);
      const auto incremental = ancestor_masks_after_edge_add(anc, e.parent, e.child);
      CHECK(incremental == ancestor_masks(grown));
    }
  }
}

TEST_CASE("neighbourhood of the empty and complete 3-node graphs") {
  const Dag empty = Dag::empty(3);
  const auto nbd_empty = structure_neighborhood(empty, ancestor_masks(empty), 2, true);
  CHECK(nbd_empty.deletions.size() == 0);
  CHECK(nbd_empty.additions.size() == 6);
  CHECK(nbd_empty.reversals.size() == 0);
  CHECK(nbd_empty.size() == 7);

  // Complete DAG 1->2, 1->3, 2->3 (0-based 0->1, 0->2, 1->2): only the
  // covered edges 0->1 and 1->2 reverse legally.
  const Dag complete = make_dag(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto nbd = structure_neighborhood(complete, ancestor_masks(complete), 2, true);
  CHECK(nbd.deletions.size() == 3);
  CHECK(nbd.additions.size() == 0);
  CHECK(nbd.reversals.size() == 2);
  CHECK(nbd.size() == 6);
  const std::set<Edge> reversals(nbd.reversals.begin(), nbd.reversals.end());
  CHECK(reversals.count(Edge{0, 1}) == 1);
  CHECK(reversals.count(Edge{1, 2}) == 1);
  CHECK(reversals.count(Edge{0, 2}) == 0);
}

TEST_CASE("neighbourhood matches brute force over all single-edge changes") {
  Rng rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const int max_parents = n - 1;
      const Dag dag = generate_random_dag(n, max_parents, rng);
      const auto edges = dag.edges();
      const std::set<Edge> present(edges.begin(), edges.end());

      long long deletions = edges.size();
      long long additions = 0, reversals = 0;
      for (int p = 0; p < n; ++p) {
        for (int c = 0; c < n; ++c) {
          if (p == c) continue;
          std::vector<std::pair<int, int>> candidate;
          for (const Edge& e : edges) candidate.push_back({e.parent, e.child});
          if (!present.count(Edge{p, c})) {
            if (dag.parent_count(c) + 1 > max_parents) continue;
            candidate.push_back({p, c});
            if (!test::dfs_has_cycle(n, candidate)) ++additions;
          } else {
            if (dag.parent_count(p) + 1 > max_parents) continue;
            std::erase(candidate, std::pair<int, int>{p, c});
            candidate.push_back({c, p});
            if (!test::dfs_has_cycle(n, candidate)) ++reversals;
          }
        }
      }

      const auto nbd = structure_neighborhood(dag, ancestor_masks(dag), max_parents, true);
      CHECK(static_cast<long long>(nbd.deletions.size()) == deletions);
      CHECK(static_cast<long long>(nbd.additions.size()) == additions);
      CHECK(static_cast<long long>(nbd.reversals.size()) == reversals);
      CHECK(nbd.size() == deletions + additions + reversals + 1);

      // Every listed addition and reversal keeps the graph acyclic.
      for (const Edge& e : nbd.additions) {
        Dag g = dag;
        g.add_edge(e.parent, e.child);
        CHECK(is_acyclic(g.parent_masks()));
      }
      for (const Edge& e : nbd.reversals) {
        Dag g = dag;
        g.remove_edge(e.parent, e.child);
        g.add_edge(e.child, e.parent);
        CHECK(is_acyclic(g.parent_masks()));
      }
    }
  }
}

TEST_CASE("parent limit shrinks the neighbourhood on both move kinds") {
  // Star into node 2: both 0 and 1 are parents of 2.
  const Dag star = make_dag(3, {{0, 2}, {1, 2}});
  const auto nbd = structure_neighborhood(star, ancestor_masks(star), 1, true);
  for (const Edge& e : nbd.additions) CHECK(star.parent_count(e.child) == 0);
  // Reversal 0->2 would give node 0 the parent 2 (fine, it has none), so
  // with limit 1 both reversals stay legal but no addition targets node 2.
  CHECK(nbd.reversals.size() == 2);
}
