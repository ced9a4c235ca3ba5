#ifndef DAGMCMC_PARTITION_HPP
#define DAGMCMC_PARTITION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dagmcmc/dag.hpp"

namespace dagmcmc {

/// An ordered partition of the node labels into non-empty elements, written
/// left to right. Edges of a consistent DAG may only point from right to
/// left: a node takes parents from elements strictly to its right, none from
/// its own element, and at least one from the element immediately to its
/// right. Labels inside an element are kept ascending so each partition has
/// one canonical representative.
class LabelledPartition {
 public:
  LabelledPartition() = default;

  static LabelledPartition single_element(int n);
  /// Validates that the elements are non-empty and cover 0..n-1 exactly
  /// once; sorts labels inside each element.
  static LabelledPartition from_elements(std::vector<std::vector<int>> elements);

  int node_count() const { return n_; }
  int element_count() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& element(int e) const { return elements_[e]; }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  int element_size(int e) const { return static_cast<int>(elements_[e].size()); }
  NodeMask element_mask(int e) const { return masks_[e]; }
  /// Index of the element containing the given node.
  int element_of(int node) const;

  std::vector<int> sizes() const;

  bool operator==(const LabelledPartition& other) const {
    return elements_ == other.elements_;
  }
  bool operator<(const LabelledPartition& other) const {
    return elements_ < other.elements_;
  }

 private:
  std::vector<std::vector<int>> elements_;
  std::vector<NodeMask> masks_;
  int n_ = 0;

  void rebuild_masks();
};

/// Per-node parent-set constraints induced by a labelled partition:
/// `banned` is the node's own element plus everything to its left,
/// `required_any` is the element immediately to its right (zero for the
/// rightmost element, meaning unconstrained).
struct NodeConstraints {
  NodeMask banned = 0;
  NodeMask required_any = 0;
  bool operator==(const NodeConstraints&) const = default;
};

std::vector<NodeConstraints> partition_constraints(const LabelledPartition& part);

/// Peels off the outpoint set (nodes without incoming edges) of the DAG
/// round by round and lists the sets in reverse removal order, so the
/// first-removed outpoints form the rightmost element.
LabelledPartition outpoint_decomposition(const Dag& dag);

}  // namespace dagmcmc

#endif
