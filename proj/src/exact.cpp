#include "dagmcmc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dagmcmc/logsumexp.hpp"

namespace dagmcmc {

std::vector<Dag> enumerate_dags(int n, int max_parents) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_dags: n must be in [1, 6]");
  if (max_parents < 0 || max_parents > n - 1)
    throw std::invalid_argument("enumerate_dags: max_parents must be in [0, n-1]");
  std::vector<Dag> out;
  // Sweep all assignments of parent masks; each node can take any subset of
  // the other nodes, filtered by in-degree and acyclicity.
  std::vector<NodeMask> parents(n, 0);
  std::vector<NodeMask> pools(n);
  for (int i = 0; i < n; ++i) pools[i] = full_mask(n) & ~node_bit(i);

  auto recurse = [&](auto&& self, int node) -> void {
    if (node == n) {
      if (is_acyclic(parents)) out.push_back(Dag::from_parent_masks(parents));
      return;
    }
    NodeMask sub = 0;
    while (true) {
      if (popcount(sub) <= max_parents) {
        parents[node] = sub;
        self(self, node + 1);
      }
      if (sub == pools[node]) break;
      sub = (sub - pools[node]) & pools[node];
    }
    parents[node] = 0;
  };
  recurse(recurse, 0);
  return out;
}

BigInt count_dags(int n) {
  if (n < 0) throw std::invalid_argument("count_dags: n must be non-negative");
  std::vector<BigInt> a(n + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt total = 0;
    BigInt binom = 1;  // C(m, k), updated incrementally
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      BigInt term = binom * (BigInt(1) << (k * (m - k))) * a[m - k];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    a[m] = total;
  }
  return a[n];
}

BigInt count_dags_per_labelling(std::span<const int> lambda) {
  const int m = static_cast<int>(lambda.size());
  for (int k : lambda)
    if (k < 1) throw std::invalid_argument("partition parts must be positive");
  BigInt result = 1;
  for (int j = 0; j + 1 < m; ++j) {
    const BigInt base = (BigInt(1) << lambda[j + 1]) - 1;
    for (int r = 0; r < lambda[j]; ++r) result *= base;
  }
  // Suffix sums S_j = k_j + ... + k_m give the free-edge exponents.
  std::vector<long long> suffix(m + 1, 0);
  for (int j = m - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + lambda[j];
  for (int j = 0; j + 2 < m; ++j) result <<= lambda[j] * suffix[j + 2];
  return result;
}

BigInt count_dags_in_partition(std::span<const int> lambda) {
  long long n = 0;
  for (int k : lambda) {
    if (k < 1) throw std::invalid_argument("partition parts must be positive");
    n += k;
  }
  BigInt multinomial = 1;
  for (long long i = 2; i <= n; ++i) multinomial *= i;
  for (int k : lambda)
    for (long long i = 2; i <= k; ++i) multinomial /= i;
  return multinomial * count_dags_per_labelling(lambda);
}

std::vector<std::vector<int>> enumerate_compositions(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("enumerate_compositions: n must be in [1, 24]");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int k = 1; k <= remaining; ++k) {
      current.push_back(k);
      self(self, remaining - k);
      current.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

std::vector<LabelledPartition> enumerate_labelled_partitions(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_labelled_partitions: n must be in [1, 8]");
  std::vector<LabelledPartition> out;
  std::vector<std::vector<int>> elements;
  NodeMask used = 0;

  auto recurse = [&](auto&& self) -> void {
    if (used == full_mask(n)) {
      out.push_back(LabelledPartition::from_elements(elements));
      return;
    }
    // Choose the next element as any non-empty subset of the unused labels.
    const NodeMask pool = full_mask(n) & ~used;
    NodeMask sub = (0 - pool) & pool;
    while (true) {
      std::vector<int> el;
      for_each_node(sub, [&](int v) { el.push_back(v); });
      elements.push_back(std::move(el));
      used |= sub;
      self(self);
      used &= ~sub;
      elements.pop_back();
      if (sub == pool) break;
      sub = (sub - pool) & pool;
    }
  };
  recurse(recurse);
  std::sort(out.begin(), out.end());
  return out;
}

long long count_linear_extensions(const Dag& dag) {
  const int n = dag.node_count();
  if (n > 8) throw std::invalid_argument("count_linear_extensions: n must be <= 8");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  long long count = 0;
  do {
    // position of each node in the current order
    int pos[kMaxNodes];
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    bool ok = true;
    for (int child = 0; child < n && ok; ++child) {
      for_each_node(dag.parents(child), [&](int parent) {
        if (pos[parent] < pos[child]) ok = false;
      });
    }
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

const Dag& PosteriorTable::mode() const {
  const auto it = std::max_element(probabilities.begin(), probabilities.end());
  return dags[static_cast<std::size_t>(it - probabilities.begin())];
}

PosteriorTable exact_posterior(const ScoreTable& table) {
  const int n = table.variable_count();
  if (n > 5) throw std::invalid_argument("exact_posterior: n must be <= 5");
  PosteriorTable result;
  result.dags = enumerate_dags(n, table.max_parents());
  std::vector<double> log_scores;
  log_scores.reserve(result.dags.size());
  for (const Dag& g : result.dags) log_scores.push_back(dag_log_score(g, table));
  const double log_z = log_sum_exp(log_scores);
  result.probabilities.reserve(log_scores.size());
  for (double s : log_scores) result.probabilities.push_back(std::exp(s - log_z));

  result.edge_marginals.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < result.dags.size(); ++i) {
    const Dag& g = result.dags[i];
    for (int child = 0; child < n; ++child) {
      for_each_node(g.parents(child), [&](int parent) {
        result.edge_marginals[child][parent] += result.probabilities[i];
      });
    }
  }
  return result;
}

}  // namespace dagmcmc
