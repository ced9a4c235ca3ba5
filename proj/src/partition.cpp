#include "dagmcmc/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace dagmcmc {

void LabelledPartition::rebuild_masks() {
  masks_.clear();
  masks_.reserve(elements_.size());
  n_ = 0;
  for (const auto& el : elements_) {
    NodeMask m = 0;
    for (int v : el) m |= node_bit(v);
    masks_.push_back(m);
    n_ += static_cast<int>(el.size());
  }
}

LabelledPartition LabelledPartition::single_element(int n) {
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("LabelledPartition: node count must be in [1, 64]");
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  LabelledPartition p;
  p.elements_.push_back(std::move(all));
  p.rebuild_masks();
  return p;
}

LabelledPartition LabelledPartition::from_elements(
    std::vector<std::vector<int>> elements) {
  NodeMask seen = 0;
  int n = 0;
  for (auto& el : elements) {
    if (el.empty())
      throw std::invalid_argument("LabelledPartition: empty element");
    std::sort(el.begin(), el.end());
    for (int v : el) {
      if (v < 0 || v >= kMaxNodes)
        throw std::invalid_argument("LabelledPartition: node label out of range");
      if (seen & node_bit(v))
        throw std::invalid_argument("LabelledPartition: duplicate node label");
      seen |= node_bit(v);
      ++n;
    }
  }
  if (seen != full_mask(n))
    throw std::invalid_argument("LabelledPartition: labels must cover 0..n-1");
  LabelledPartition p;
  p.elements_ = std::move(elements);
  p.rebuild_masks();
  return p;
}

int LabelledPartition::element_of(int node) const {
  for (int e = 0; e < element_count(); ++e) {
    if (masks_[e] & node_bit(node)) return e;
  }
  throw std::out_of_range("LabelledPartition::element_of: unknown node");
}

std::vector<int> LabelledPartition::sizes() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (const auto& el : elements_) out.push_back(static_cast<int>(el.size()));
  return out;
}

std::vector<NodeConstraints> partition_constraints(const LabelledPartition& part) {
  const int n = part.node_count();
  const int m = part.element_count();
  std::vector<NodeConstraints> out(n);
  NodeMask left = 0;  // union of elements strictly to the left
  for (int e = 0; e < m; ++e) {
    const NodeMask own = part.element_mask(e);
    const NodeMask required = (e + 1 < m) ? part.element_mask(e + 1) : 0;
    for (int v : part.element(e)) {
      out[v].banned = left | own;
      out[v].required_any = required;
    }
    left |= own;
  }
  return out;
}

LabelledPartition outpoint_decomposition(const Dag& dag) {
  const int n = dag.node_count();
  std::vector<std::vector<int>> rounds;
  NodeMask removed = 0;
  const NodeMask all = full_mask(n);
  while (removed != all) {
    std::vector<int> outpoints;
    for (int i = 0; i < n; ++i) {
      if (removed & node_bit(i)) continue;
      if ((dag.parents(i) & ~removed) == 0) outpoints.push_back(i);
    }
    // A valid Dag always has at least one outpoint per round.
    NodeMask round_mask = 0;
    for (int v : outpoints) round_mask |= node_bit(v);
    removed |= round_mask;
    rounds.push_back(std::move(outpoints));
  }
  std::reverse(rounds.begin(), rounds.end());
  return LabelledPartition::from_elements(std::move(rounds));
}

}  // namespace dagmcmc
