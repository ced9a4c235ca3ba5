#include "dagmcmc/dag.hpp"

#include <stdexcept>
#include <string>

namespace dagmcmc {

bool is_acyclic(std::span<const NodeMask> parents) {
  const int n = static_cast<int>(parents.size());
  if (n > kMaxNodes) throw std::invalid_argument("is_acyclic: more than 64 nodes");
  for (int i = 0; i < n; ++i) {
    if (parents[i] & node_bit(i))
      throw std::invalid_argument("is_acyclic: self loop at node " + std::to_string(i + 1));
  }
  // Repeatedly strip nodes whose remaining parents are all stripped already.
  NodeMask removed = 0;
  const NodeMask all = full_mask(n);
  while (removed != all) {
    NodeMask next = removed;
    for (int i = 0; i < n; ++i) {
      if (removed & node_bit(i)) continue;
      if ((parents[i] & ~removed) == 0) next |= node_bit(i);
    }
    if (next == removed) return false;
    removed = next;
  }
  return true;
}

Dag Dag::empty(int n) {
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("Dag: node count must be in [1, 64]");
  Dag d;
  d.parents_.assign(n, 0);
  d.edge_count_ = 0;
  return d;
}

Dag Dag::from_parent_masks(std::vector<NodeMask> parents) {
  const int n = static_cast<int>(parents.size());
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("Dag: node count must be in [1, 64]");
  const NodeMask valid = full_mask(n);
  for (int i = 0; i < n; ++i) {
    if (parents[i] & ~valid)
      throw std::invalid_argument("Dag: parent bit out of range at node " + std::to_string(i + 1));
  }
  if (!is_acyclic(parents)) throw std::invalid_argument("Dag: graph has a directed cycle");
  Dag d;
  d.edge_count_ = 0;
  for (NodeMask m : parents) d.edge_count_ += popcount(m);
  d.parents_ = std::move(parents);
  return d;
}

std::vector<Edge> Dag::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int child = 0; child < node_count(); ++child) {
    for_each_node(parents_[child], [&](int parent) { out.push_back({parent, child}); });
  }
  return out;
}

void Dag::add_edge(int parent, int child) {
  if (parents_[child] & node_bit(parent))
    throw std::logic_error("Dag::add_edge: edge already present");
  parents_[child] |= node_bit(parent);
  ++edge_count_;
}

void Dag::remove_edge(int parent, int child) {
  if (!(parents_[child] & node_bit(parent)))
    throw std::logic_error("Dag::remove_edge: edge not present");
  parents_[child] &= ~node_bit(parent);
  --edge_count_;
}

void Dag::set_parents(int i, NodeMask m) {
  edge_count_ += popcount(m) - popcount(parents_[i]);
  parents_[i] = m;
}

std::vector<NodeMask> ancestor_masks(const Dag& dag) {
  const int n = dag.node_count();
  std::vector<NodeMask> anc(n, 0);
  // Process nodes in topological order via repeated outpoint stripping.
  NodeMask done = 0;
  const NodeMask all = full_mask(n);
  while (done != all) {
    for (int i = 0; i < n; ++i) {
      if (done & node_bit(i)) continue;
      const NodeMask pa = dag.parents(i);
      if ((pa & ~done) != 0) continue;  // some parent not yet resolved
      NodeMask a = pa;
      for_each_node(pa, [&](int p) { a |= anc[p]; });
      anc[i] = a;
      done |= node_bit(i);
    }
  }
  return anc;
}

std::vector<NodeMask> descendant_masks(const Dag& dag) {
  const std::vector<NodeMask> anc = ancestor_masks(dag);
  const int n = dag.node_count();
  std::vector<NodeMask> desc(n, 0);
  for (int i = 0; i < n; ++i) {
    for_each_node(anc[i], [&](int a) { desc[a] |= node_bit(i); });
  }
  return desc;
}

std::vector<NodeMask> ancestor_masks_after_edge_add(
    std::span<const NodeMask> before, int parent, int child) {
  const int n = static_cast<int>(before.size());
  std::vector<NodeMask> anc(before.begin(), before.end());
  // Everything that can reach `parent`, plus `parent` itself, becomes an
  // ancestor of `child` and of every node below it.
  const NodeMask gained = anc[parent] | node_bit(parent);
  anc[child] |= gained;
  for (int i = 0; i < n; ++i) {
    if (anc[i] & node_bit(child)) anc[i] |= gained | node_bit(child);
  }
  return anc;
}

StructureNeighborhood structure_neighborhood(const Dag& dag,
                                             std::span<const NodeMask> ancestors,
                                             int max_parents,
                                             bool include_reversals) {
  const int n = dag.node_count();
  StructureNeighborhood nbd;
  for (int child = 0; child < n; ++child) {
    const NodeMask pa = dag.parents(child);
    for_each_node(pa, [&](int parent) {
      nbd.deletions.push_back({parent, child});
      if (include_reversals) {
        // Reversing parent -> child is legal iff there is no other directed
        // path from parent to child (parent must not be a non-direct
        // ancestor) and the parent gains at most max_parents parents.
        if (dag.parent_count(parent) + 1 > max_parents) return;
        bool nondirect = false;
        for_each_node(pa & ~node_bit(parent), [&](int other) {
          if (ancestors[other] & node_bit(parent)) nondirect = true;
        });
        if (!nondirect) nbd.reversals.push_back({parent, child});
      }
    });
    if (dag.parent_count(child) + 1 > max_parents) continue;
    for (int parent = 0; parent < n; ++parent) {
      if (parent == child) continue;
      if (pa & node_bit(parent)) continue;
      // Adding parent -> child creates a cycle iff child reaches parent.
      if (ancestors[parent] & node_bit(child)) continue;
      nbd.additions.push_back({parent, child});
    }
  }
  return nbd;
}

}  // namespace dagmcmc
