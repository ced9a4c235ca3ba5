#ifndef DAGMCMC_DAG_HPP
#define DAGMCMC_DAG_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dagmcmc {

/// Node sets are bit masks, so graphs are limited to 64 nodes.
using NodeMask = std::uint64_t;

inline constexpr int kMaxNodes = 64;

inline constexpr NodeMask node_bit(int i) { return NodeMask{1} << i; }

inline constexpr NodeMask full_mask(int n) {
  return (n >= kMaxNodes) ? ~NodeMask{0} : (NodeMask{1} << n) - 1;
}

inline int popcount(NodeMask m) { return __builtin_popcountll(m); }

/// Index of the lowest set bit; undefined for m == 0.
inline int lowest_bit(NodeMask m) { return __builtin_ctzll(m); }

/// Calls fn(i) for every set bit of m, lowest first.
template <typename Fn>
inline void for_each_node(NodeMask m, Fn&& fn) {
  while (m != 0) {
    const int i = lowest_bit(m);
    fn(i);
    m &= m - 1;
  }
}

struct Edge {
  int parent = -1;
  int child = -1;
  auto operator<=>(const Edge&) const = default;
};

/// True iff the parent-mask rows describe a graph with no directed cycle.
/// Rows with their own bit set (self loops) are rejected with an exception.
bool is_acyclic(std::span<const NodeMask> parents);

/// Directed acyclic graph on n labelled nodes. Row i holds the parents of
/// node i as a bit mask, i.e. bit j of parents(i) means the edge j -> i.
/// Instances are validated on construction and immutable afterwards except
/// through the checked edge editors, so acyclicity always holds.
class Dag {
 public:
  Dag() = default;

  static Dag empty(int n);
  /// Throws std::invalid_argument on self loops, out-of-range bits or cycles.
  static Dag from_parent_masks(std::vector<NodeMask> parents);

  int node_count() const { return static_cast<int>(parents_.size()); }
  int edge_count() const { return edge_count_; }
  NodeMask parents(int i) const { return parents_[i]; }
  std::span<const NodeMask> parent_masks() const { return parents_; }
  int parent_count(int i) const { return popcount(parents_[i]); }
  bool has_edge(int parent, int child) const {
    return (parents_[child] & node_bit(parent)) != 0;
  }

  std::vector<Edge> edges() const;

  /// Checked single-edge editors; they assume the caller already verified
  /// acyclicity of the result (chain code does, via ancestor masks).
  void add_edge(int parent, int child);
  void remove_edge(int parent, int child);

  /// Replaces the whole parent set of one node.
  void set_parents(int i, NodeMask m);

  bool operator==(const Dag& other) const { return parents_ == other.parents_; }
  bool operator<(const Dag& other) const { return parents_ < other.parents_; }

 private:
  std::vector<NodeMask> parents_;
  int edge_count_ = 0;
};

/// Row i = ancestors of i (transitive closure of the parent relation).
std::vector<NodeMask> ancestor_masks(const Dag& dag);

/// Row i = descendants of i; the transpose of ancestor_masks.
std::vector<NodeMask> descendant_masks(const Dag& dag);

/// O(n^2) incremental closure update after adding the edge parent -> child.
/// `before` must be the ancestor masks of the graph without that edge.
std::vector<NodeMask> ancestor_masks_after_edge_add(
    std::span<const NodeMask> before, int parent, int child);

/// All legal single-edge changes of a DAG, including the unchanged graph
/// itself as one implicit member of the neighbourhood. Additions and
/// reversals respect acyclicity and the per-node parent limit.
struct StructureNeighborhood {
  std::vector<Edge> deletions;
  std::vector<Edge> additions;
  std::vector<Edge> reversals;

  long long size() const {
    return 1 + static_cast<long long>(deletions.size()) +
           static_cast<long long>(additions.size()) +
           static_cast<long long>(reversals.size());
  }
};

StructureNeighborhood structure_neighborhood(const Dag& dag,
                                             std::span<const NodeMask> ancestors,
                                             int max_parents,
                                             bool include_reversals);

}  // namespace dagmcmc

#endif
