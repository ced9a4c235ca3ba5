#include "dagmcmc/partition_moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace dagmcmc {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long basic_neighborhood_size(std::span<const int> lambda) {
  long long size = static_cast<long long>(lambda.size()) - 1;
  for (int k : lambda) size += (1LL << k) - 2;
  return size;
}

long long relocation_neighborhood_size(std::span<const int> lambda) {
  const long long m = static_cast<long long>(lambda.size());
  long long n = 0, size1 = 0, size2 = 0;
  for (int k : lambda) {
    n += k;
    if (k == 1) ++size1;
    if (k == 2) ++size2;
  }
  return 2 * m * n - 2 * size1 - 2 * size2;
}

long long swap_neighborhood_size(std::span<const int> lambda, bool adjacent_only) {
  const int m = static_cast<int>(lambda.size());
  long long n = 0;
  for (int k : lambda) n += k;
  long long size = 0;
  if (adjacent_only) {
    for (int i = 0; i + 1 < m; ++i)
      size += static_cast<long long>(lambda[i]) * lambda[i + 1];
  } else {
    for (int k : lambda) size += static_cast<long long>(k) * (n - k);
    size /= 2;
  }
  return size;
}

BasicMoveChoice describe_basic_move(std::span<const int> lambda, long long index) {
  const int m = static_cast<int>(lambda.size());
  if (index < 1 || index > basic_neighborhood_size(lambda))
    throw std::out_of_range("basic move: index outside the neighbourhood");
  if (index < m) return {true, static_cast<int>(index) - 1, 0};
  long long offset = m - 1;
  for (int e = 0; e < m; ++e) {
    for (int c = 1; c < lambda[e]; ++c) {
      offset += binomial(lambda[e], c);
      if (index <= offset) return {false, e, c};
    }
  }
  throw std::logic_error("basic move: index mapping failed");
}

LabelledPartition apply_join(const LabelledPartition& part, int left_element) {
  std::vector<std::vector<int>> elements = part.elements();
  if (left_element < 0 || left_element + 1 >= part.element_count())
    throw std::out_of_range("join: no right neighbour");
  auto& left = elements[left_element];
  auto& right = elements[left_element + 1];
  left.insert(left.end(), right.begin(), right.end());
  elements.erase(elements.begin() + left_element + 1);
  return LabelledPartition::from_elements(std::move(elements));
}

LabelledPartition apply_split_left(const LabelledPartition& part, int element,
                                   std::span<const int> nodes) {
  std::vector<std::vector<int>> elements = part.elements();
  auto& source = elements[element];
  std::vector<int> moved(nodes.begin(), nodes.end());
  for (int v : moved) {
    const auto it = std::find(source.begin(), source.end(), v);
    if (it == source.end())
      throw std::invalid_argument("split: node not in source element");
    source.erase(it);
  }
  if (source.empty() || moved.empty())
    throw std::invalid_argument("split: both parts must be non-empty");
  elements.insert(elements.begin() + element, std::move(moved));
  return LabelledPartition::from_elements(std::move(elements));
}

LabelledPartition propose_basic_move(const LabelledPartition& part, Rng& rng) {
  const std::vector<int> lambda = part.sizes();
  const long long size = basic_neighborhood_size(lambda);
  if (size < 1)
    throw std::invalid_argument("basic move: single-node partition has no moves");
  const long long index = 1 + uniform_index(rng, size);
  const BasicMoveChoice choice = describe_basic_move(lambda, index);
  if (choice.is_join) return apply_join(part, choice.element);
  // Uniform subset of split_count nodes via a partial Fisher-Yates shuffle.
  std::vector<int> pool = part.element(choice.element);
  for (int i = 0; i < choice.split_count; ++i) {
    const long long j = i + uniform_index(rng, static_cast<long long>(pool.size()) - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(choice.split_count);
  return apply_split_left(part, choice.element, pool);
}

std::vector<RelocationMove> enumerate_relocation_moves(const LabelledPartition& part) {
  const int m = part.element_count();
  std::vector<RelocationMove> moves;
  for (int e = 0; e < m; ++e) {
    const int k = part.element_size(e);
    for (int node : part.element(e)) {
      for (int d = 0; d < m; ++d) {
        if (d != e) moves.push_back({node, false, d});
      }
      for (int g = 0; g <= m; ++g) {
        if (k == 1 && (g == e || g == e + 1)) continue;  // no-op
        if (k == 2 && g == e) continue;  // duplicate of the partner's right-gap move
        moves.push_back({node, true, g});
      }
    }
  }
  return moves;
}

LabelledPartition apply_relocation(const LabelledPartition& part,
                                   const RelocationMove& move) {
  const int source = part.element_of(move.node);
  std::vector<std::vector<int>> elements = part.elements();
  auto& src = elements[source];
  src.erase(std::find(src.begin(), src.end(), move.node));
  const bool source_vanishes = src.empty();

  if (move.to_gap) {
    int pos = move.destination;
    if (source_vanishes && source < pos) --pos;
    if (source_vanishes) elements.erase(elements.begin() + source);
    elements.insert(elements.begin() + pos, std::vector<int>{move.node});
  } else {
    elements[move.destination].push_back(move.node);
    if (source_vanishes) elements.erase(elements.begin() + source);
  }
  return LabelledPartition::from_elements(std::move(elements));
}

LabelledPartition propose_relocation(const LabelledPartition& part, Rng& rng) {
  const std::vector<RelocationMove> moves = enumerate_relocation_moves(part);
  if (moves.empty()) return part;  // single node, nothing to do
  const long long pick = uniform_index(rng, static_cast<long long>(moves.size()));
  return apply_relocation(part, moves[pick]);
}

long long relocation_multiplicity(const LabelledPartition& from,
                                  const LabelledPartition& to) {
  long long count = 0;
  for (const RelocationMove& move : enumerate_relocation_moves(from)) {
    if (apply_relocation(from, move) == to) ++count;
  }
  return count;
}

std::vector<SwapMove> enumerate_swap_moves(const LabelledPartition& part,
                                           bool adjacent_only) {
  const int m = part.element_count();
  std::vector<SwapMove> moves;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (adjacent_only && b != a + 1) continue;
      for (int x : part.element(a))
        for (int y : part.element(b)) moves.push_back({x, y});
    }
  }
  return moves;
}

LabelledPartition apply_swap(const LabelledPartition& part, const SwapMove& move) {
  const int ea = part.element_of(move.node_a);
  const int eb = part.element_of(move.node_b);
  if (ea == eb) throw std::invalid_argument("swap: nodes share an element");
  std::vector<std::vector<int>> elements = part.elements();
  auto& va = elements[ea];
  auto& vb = elements[eb];
  *std::find(va.begin(), va.end(), move.node_a) = move.node_b;
  *std::find(vb.begin(), vb.end(), move.node_b) = move.node_a;
  return LabelledPartition::from_elements(std::move(elements));
}

std::optional<LabelledPartition> propose_swap(const LabelledPartition& part,
                                              bool adjacent_only, Rng& rng) {
  const std::vector<SwapMove> moves = enumerate_swap_moves(part, adjacent_only);
  if (moves.empty()) return std::nullopt;
  const long long pick = uniform_index(rng, static_cast<long long>(moves.size()));
  return apply_swap(part, moves[pick]);
}

}  // namespace dagmcmc
