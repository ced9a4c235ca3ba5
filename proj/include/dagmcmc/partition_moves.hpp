#ifndef DAGMCMC_PARTITION_MOVES_HPP
#define DAGMCMC_PARTITION_MOVES_HPP

#include <optional>
#include <span>
#include <vector>

#include "dagmcmc/chain.hpp"
#include "dagmcmc/partition.hpp"

namespace dagmcmc {

/// Size of the split/join neighbourhood, m - 1 joins plus
/// sum_i (2^{k_i} - 2) splits, i.e. -m - 1 + sum_i 2^{k_i}.
long long basic_neighborhood_size(std::span<const int> lambda);

/// Size of the single-node relocation neighbourhood,
/// 2mn - 2 #size-1 elements - 2 #size-2 elements.
long long relocation_neighborhood_size(std::span<const int> lambda);

/// Cross-element swap pair counts: sum_i k_i (n - k_i) / 2 for the global
/// family, sum_i k_i k_{i+1} for the adjacent family.
long long swap_neighborhood_size(std::span<const int> lambda, bool adjacent_only);

/// What a given index into the split/join neighbourhood means: indices
/// 1..m-1 join that element with its right neighbour; the rest map onto
/// (element, subset size) blocks of binomial sizes, left to right and by
/// ascending subset size within an element.
struct BasicMoveChoice {
  bool is_join = false;
  int element = 0;      // join: left element of the pair; split: source element
  int split_count = 0;  // number of nodes separated off (split only)
};

BasicMoveChoice describe_basic_move(std::span<const int> lambda, long long index);

LabelledPartition apply_join(const LabelledPartition& part, int left_element);

/// Splits `nodes` (a subset of the element) off into a new element placed
/// immediately to the left of the remainder.
LabelledPartition apply_split_left(const LabelledPartition& part, int element,
                                   std::span<const int> nodes);

/// Uniform draw from the split/join neighbourhood.
LabelledPartition propose_basic_move(const LabelledPartition& part, Rng& rng);

/// Single-node relocation: move `node` either into another element or into
/// one of the gaps (gap g sits immediately before element g; gap m is the
/// rightmost). Excluded as no-ops or duplicates: a singleton's two adjacent
/// gaps, and the gap immediately left of a two-node element.
struct RelocationMove {
  int node = 0;
  bool to_gap = false;
  int destination = 0;  // element index, or gap index in [0, m]
  bool operator==(const RelocationMove&) const = default;
};

std::vector<RelocationMove> enumerate_relocation_moves(const LabelledPartition& part);

LabelledPartition apply_relocation(const LabelledPartition& part,
                                   const RelocationMove& move);

LabelledPartition propose_relocation(const LabelledPartition& part, Rng& rng);

/// Number of admissible relocation moves of `from` that produce `to`.
/// Adjacent singletons make a handful of outcomes reachable two ways, so
/// the acceptance ratio needs the exact proposal multiplicities.
long long relocation_multiplicity(const LabelledPartition& from,
                                  const LabelledPartition& to);

struct SwapMove {
  int node_a = 0;
  int node_b = 0;
  bool operator==(const SwapMove&) const = default;
};

/// Unordered cross-element label swaps; the adjacent family restricts the
/// two elements to be neighbours. Empty for a single-element partition.
std::vector<SwapMove> enumerate_swap_moves(const LabelledPartition& part,
                                           bool adjacent_only);

LabelledPartition apply_swap(const LabelledPartition& part, const SwapMove& move);

/// nullopt when no swap exists (single element); callers treat that as a
/// stay-still step.
std::optional<LabelledPartition> propose_swap(const LabelledPartition& part,
                                              bool adjacent_only, Rng& rng);

}  // namespace dagmcmc

#endif
