#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "dagmcmc/bge.hpp"
#include "dagmcmc/exact.hpp"
#include "dagmcmc/logsumexp.hpp"
#include "dagmcmc/score_table.hpp"
#include "support/helpers.hpp"

using namespace dagmcmc;
using test::make_dag;

namespace {

/// Brute-force marginal likelihood of a single variable under the
/// normal-Wishart prior, by two-dimensional Simpson quadrature over the
/// mean and the precision. Integrand in log space with a max shift.
double univariate_log_marginal_by_quadrature(const Eigen::VectorXd& x, double alpha_mu,
                                             double alpha_w, double nu, double t_scale) {
  const int N = static_cast<int>(x.size());
  const auto log_joint = [&](double mu, double tau) {
    // Wishart_1(tau; T = t_scale, dof = alpha_w) as a Gamma density.
    double lp = 0.5 * alpha_w * std::log(t_scale) - 0.5 * alpha_w * std::log(2.0) -
                std::lgamma(0.5 * alpha_w) + (0.5 * alpha_w - 1.0) * std::log(tau) -
                0.5 * t_scale * tau;
    // mu | tau ~ N(nu, 1 / (alpha_mu tau))
    lp += 0.5 * std::log(alpha_mu * tau / (2.0 * M_PI)) -
          0.5 * alpha_mu * tau * (mu - nu) * (mu - nu);
    for (int h = 0; h < N; ++h) {
      lp += 0.5 * std::log(tau / (2.0 * M_PI)) - 0.5 * tau * (x[h] - mu) * (x[h] - mu);
    }
    return lp;
  };

  const int grid = 1601;
  const double mu_lo = -8.0, mu_hi = 8.0;
  const double tau_lo = 1e-8, tau_hi = 250.0;
  const double dmu = (mu_hi - mu_lo) / (grid - 1);
  const double dtau = (tau_hi - tau_lo) / (grid - 1);
  auto simpson_weight = [&](int i) { return (i == 0 || i == grid - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0); };

  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double mu = mu_lo + i * dmu;
      const double tau = tau_lo + j * dtau;
      terms.push_back(log_joint(mu, tau) + std::log(simpson_weight(i)) +
                      std::log(simpson_weight(j)));
    }
  }
  return log_sum_exp(terms) + std::log(dmu * dtau / 9.0);
}

}  // namespace

TEST_CASE("single-variable score equals numerical integration of the marginal") {
  Eigen::MatrixXd values(3, 1);
  values << 1e-3, -2e-3, 5e-4;
  const DataSet data = make_dataset(values);
  const BgeParams params = BgeParams::defaults(data);

  const double direct = node_log_score(0, 0, data, params);
  const double quadrature = univariate_log_marginal_by_quadrature(
      data.values.col(0), params.alpha_mu, params.alpha_w, params.nu(0), params.t_scale);
  CHECK(direct == doctest::Approx(quadrature).epsilon(1e-6));

  // A second configuration away from the defaults.
  BgeParams other = params;
  other.alpha_w = 4.5;
  other.t_scale = 0.8;
  other.nu(0) = 0.3;
  const double direct2 = node_log_score(0, 0, data, other);
  const double quadrature2 = univariate_log_marginal_by_quadrature(
      data.values.col(0), other.alpha_mu, other.alpha_w, other.nu(0), other.t_scale);
  CHECK(direct2 == doctest::Approx(quadrature2).epsilon(1e-6));
}

TEST_CASE("two-node score equivalence and row exchangeability") {
  const DataSet data = test::toy_dataset(2, 40);
  const BgeParams params = BgeParams::defaults(data);
  const double forward = node_log_score(0, node_bit(1), data, params) +
                         node_log_score(1, 0, data, params);
  const double backward = node_log_score(1, node_bit(0), data, params) +
                          node_log_score(0, 0, data, params);
  CHECK(forward == doctest::Approx(backward).epsilon(1e-9));

  // Permuting rows leaves the score bit-identical; duplicating them does not.
  Eigen::MatrixXd reversed = data.values.colwise().reverse();
  const DataSet permuted = make_dataset(reversed, data.names);
  CHECK(node_log_score(0, node_bit(1), permuted, BgeParams::defaults(permuted)) ==
        node_log_score(0, node_bit(1), data, params));

  Eigen::MatrixXd doubled(80, 2);
  doubled << data.values, data.values;
  const DataSet stacked = make_dataset(doubled);
  CHECK(node_log_score(0, 0, stacked, BgeParams::defaults(stacked)) !=
        node_log_score(0, 0, data, params));
}

TEST_CASE("score equivalence across Markov equivalence classes (n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    const DataSet data = test::toy_dataset(n, 50, 17 + n);
    const ScoreTable table = build_score_table(data, n - 1);
    // Group DAGs by skeleton + v-structures.
    using Signature = std::pair<std::set<std::pair<int, int>>, std::set<std::tuple<int, int, int>>>;
    std::map<Signature, std::vector<double>> classes;
    for (const Dag& dag : enumerate_dags(n, n - 1)) {
      Signature sig;
      for (const Edge& e : dag.edges())
        sig.first.insert({std::min(e.parent, e.child), std::max(e.parent, e.child)});
      for (int c = 0; c < n; ++c) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (a == c || b == c) continue;
            if (dag.has_edge(a, c) && dag.has_edge(b, c) && !dag.has_edge(a, b) &&
                !dag.has_edge(b, a))
              sig.second.insert({a, b, c});
          }
        }
      }
      classes[sig].push_back(dag_log_score(dag, table));
    }
    for (const auto& [sig, scores] : classes) {
      for (double s : scores)
        CHECK(s == doctest::Approx(scores.front()).epsilon(1e-9));
    }
  }
}

TEST_CASE("table sizes and entry counts") {
  const DataSet data3 = test::toy_dataset(3, 30);
  const ScoreTable t3 = build_score_table(data3, 2);
  for (int node = 0; node < 3; ++node) CHECK(t3.entries(node).size() == 4);

  const DataSet data5 = test::toy_dataset(5, 30);
  const ScoreTable t5 = build_score_table(data5, 4);
  for (int node = 0; node < 5; ++node) CHECK(t5.entries(node).size() == 16);

  // n = 14, K = 4: 1 + 13 + 78 + 286 + 715 sets per node.
  const ScoreTable t14 = uniform_score_table(14, 4);
  for (int node = 0; node < 14; ++node) CHECK(t14.entries(node).size() == 1093);

  // Entries are in ascending mask order and all finite.
  for (int node = 0; node < 5; ++node) {
    NodeMask prev = 0;
    bool first = true;
    for (const ScoreEntry& e : t5.entries(node)) {
      if (!first) CHECK(e.parents > prev);
      CHECK(std::isfinite(e.log_score));
      prev = e.parents;
      first = false;
    }
  }
}

TEST_CASE("degenerate data fails fast at table build") {
  Eigen::MatrixXd constant(10, 2);
  constant.col(0).setConstant(1.5);
  constant.col(1).setRandom();
  CHECK_THROWS_WITH_AS(build_score_table(make_dataset(constant), 1),
                       doctest::Contains("constant"), std::invalid_argument);

  const DataSet tiny = test::toy_dataset(3, 3);
  CHECK_THROWS_AS(build_score_table(tiny, 2), std::invalid_argument);  // N <= K + 1
  CHECK_NOTHROW(build_score_table(tiny, 1));
}

TEST_CASE("incremental rescoring equals full recomputation") {
  const DataSet data = test::toy_dataset(4, 60, 29);
  const ScoreTable table = build_score_table(data, 3);
  Dag dag = make_dag(4, {{0, 1}, {1, 2}});
  const double before = dag_log_score(dag, table);
  const double node2_before = table.log_score(2, dag.parents(2));
  dag.add_edge(3, 2);
  const double node2_after = table.log_score(2, dag.parents(2));
  CHECK(dag_log_score(dag, table) ==
        doctest::Approx(before - node2_before + node2_after).epsilon(1e-12));
}

TEST_CASE("constrained sums against brute-force subset filtering") {
  // The worked example: lambda = [1, 2, 2], pi = (2, 3, 4, 1, 5) in 1-based
  // labels; node 3 must avoid {2, 4} and include one of {1, 5}.
  const ScoreTable table5 = test::arbitrary_score_table(5, 4);
  const NodeMask banned = node_bit(1) | node_bit(3);
  const NodeMask required = node_bit(0) | node_bit(4);
  const auto sum = constrained_log_score_sum(table5, 2, banned, required);
  REQUIRE(sum.has_value());
  const double expected = log_sum_exp(std::vector<double>{
      table5.log_score(2, node_bit(0)), table5.log_score(2, node_bit(4)),
      table5.log_score(2, node_bit(0) | node_bit(4))});
  CHECK(*sum == doctest::Approx(expected).epsilon(1e-12));

  // Unconstrained: the sum over every tabulated set.
  std::vector<double> all;
  for (const ScoreEntry& e : table5.entries(2)) all.push_back(e.log_score);
  CHECK(*constrained_log_score_sum(table5, 2, 0, 0) ==
        doctest::Approx(log_sum_exp(all)).epsilon(1e-12));

  // Random constraints, n <= 6: brute-force subset filter.
  Rng rng(31);
  for (int n = 3; n <= 6; ++n) {
    const ScoreTable table = test::arbitrary_score_table(n, n - 1, 100 + n);
    for (int trial = 0; trial < 50; ++trial) {
      const int node = static_cast<int>(uniform_index(rng, n));
      NodeMask banned_mask = 0, required_mask = 0;
      for (int v = 0; v < n; ++v) {
        if (v == node) continue;
        const double u = uniform_real(rng);
        if (u < 0.3) banned_mask |= node_bit(v);
        else if (u < 0.5) required_mask |= node_bit(v);
      }
      std::vector<double> kept;
      for (const ScoreEntry& e : table.entries(node)) {
        if (e.parents & banned_mask) continue;
        if (required_mask != 0 && (e.parents & required_mask) == 0) continue;
        kept.push_back(e.log_score);
      }
      const auto got = constrained_log_score_sum(table, node, banned_mask, required_mask);
      if (kept.empty()) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(log_sum_exp(kept)).epsilon(1e-11));
      }

      // Difference identity: sum with a required member equals
      // log(exp(unconstrained) - exp(avoiding it)) evaluated stably.
      if (popcount(required_mask) == 1) {
        const auto allowed = constrained_log_score_sum(table, node, banned_mask, 0);
        const auto avoiding =
            constrained_log_score_sum(table, node, banned_mask | required_mask, 0);
        REQUIRE(allowed.has_value());
        REQUIRE(avoiding.has_value());
        if (got.has_value())
          CHECK(*got == doctest::Approx(log_sub_exp(*allowed, *avoiding)).epsilon(1e-9));
      }
    }
  }

  // No permissible set: required_any with a zero parent limit.
  const ScoreTable k0 = uniform_score_table(3, 0);
  CHECK_FALSE(constrained_log_score_sum(k0, 0, 0, node_bit(1)).has_value());
}
