#include <doctest.h>

#include <map>

#include "dagmcmc/exact.hpp"
#include "support/helpers.hpp"

using namespace dagmcmc;
using test::make_dag;

TEST_CASE("enumerate_dags counts") {
  CHECK(enumerate_dags(2, 1).size() == 3);
  CHECK(enumerate_dags(3, 2).size() == 25);
  CHECK(enumerate_dags(4, 3).size() == 543);
  // With a parent limit the family shrinks: 27 single-parent assignments
  // minus 9 two-cycles and 2 three-cycles.
  CHECK(enumerate_dags(3, 1).size() == 16);
  CHECK_THROWS(enumerate_dags(7, 2));
}

TEST_CASE("count_dags recursion matches enumeration and known values") {
  CHECK(count_dags(1) == 1);
  CHECK(count_dags(2) == 3);
  CHECK(count_dags(3) == 25);
  CHECK(count_dags(4) == 543);
  CHECK(count_dags(5) == 29281);
  CHECK(count_dags(8) == BigInt("783702329343"));
  for (int n = 1; n <= 5; ++n)
    CHECK(count_dags(n) == BigInt(enumerate_dags(n, n - 1).size()));
}

TEST_CASE("count_dags_in_partition formula") {
  CHECK(count_dags_in_partition(std::vector<int>{5}) == 1);
  CHECK(count_dags_in_partition(std::vector<int>{1, 1}) == 2);
  CHECK(count_dags_in_partition(std::vector<int>{1, 1, 3}) == 1120);
  CHECK(count_dags_per_labelling(std::vector<int>{1, 1, 3}) == 56);

  // Partition counts add up to the total DAG count.
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& lambda : enumerate_compositions(n))
      total += count_dags_in_partition(lambda);
    CHECK(total == count_dags(n));
  }
}

TEST_CASE("count_linear_extensions by permutation sweep") {
  CHECK(count_linear_extensions(Dag::empty(3)) == 6);
  CHECK(count_linear_extensions(make_dag(3, {{0, 1}, {1, 2}})) == 1);
  CHECK(count_linear_extensions(make_dag(3, {{0, 1}})) == 3);
  // Out-star from node 1: 1 -> 0, 1 -> 2, 1 -> 3 has 3! orders of the leaves.
  CHECK(count_linear_extensions(make_dag(4, {{1, 0}, {1, 2}, {1, 3}})) == 6);
}

TEST_CASE("exact posterior normalises and respects score equivalence") {
  // Constant scores: uniform posterior over all DAGs.
  const ScoreTable flat = uniform_score_table(3, 2, -1.0);
  const PosteriorTable uniform = exact_posterior(flat);
  CHECK(uniform.dags.size() == 25);
  double total = 0.0;
  for (double p : uniform.probabilities) {
    CHECK(p == doctest::Approx(1.0 / 25).epsilon(1e-12));
    total += p;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // Each directed edge sits in 8 of the 25 graphs: the edge counts by size
  // are 1 x 0, 6 x 1, 12 x 2, 6 x 3, so 48 slots spread over 6 edges.
  long long with_edge = 0;
  for (const Dag& g : uniform.dags)
    if (g.has_edge(0, 1)) ++with_edge;
  CHECK(with_edge == 8);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(uniform.edge_marginals[i][j] ==
            doctest::Approx(i == j ? 0.0 : 8.0 / 25).epsilon(1e-12));

  // Strongly coupled two-variable data: the empty graph loses and the two
  // orientations split the rest evenly.
  Rng rng(5);
  Eigen::MatrixXd values(60, 2);
  std::normal_distribution<double> noise(0.0, 0.05);
  for (int i = 0; i < 60; ++i) {
    const double x = (i % 7) - 3.0;
    values(i, 0) = x + noise(rng);
    values(i, 1) = 2.0 * x + noise(rng);
  }
  const DataSet data = make_dataset(std::move(values));
  const PosteriorTable post = exact_posterior(build_score_table(data, 1));
  REQUIRE(post.dags.size() == 3);
  std::map<int, double> by_edges;
  for (std::size_t i = 0; i < post.dags.size(); ++i)
    by_edges[post.dags[i].edge_count() == 0 ? 0 : (post.dags[i].has_edge(0, 1) ? 1 : 2)] =
        post.probabilities[i];
  CHECK(by_edges[0] < 1e-6);
  CHECK(by_edges[1] == doctest::Approx(by_edges[2]).epsilon(1e-9));
}
