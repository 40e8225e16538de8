#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ocpoly/limits.hpp"
#include "ocpoly/poset.hpp"

namespace ocpoly {

// An ordered bipartition (oE, cE) of the Hasse edges of `base`. Edges are
// kept as the base poset's cover pairs, sorted.
class EdgePartition {
 public:
  // `order_edges` may name each edge in either orientation; anything that
  // is not a cover of `base` raises UnknownEdge.
  static EdgePartition make(const Poset& base, const std::vector<Cover>& order_edges);
  // Bit k of `mask` puts base.covers()[k] into oE.
  static EdgePartition from_mask(const Poset& base, std::uint64_t mask);

  const Poset& base() const { return base_; }
  const std::vector<Cover>& order_edges() const { return order_edges_; }
  const std::vector<Cover>& chain_edges() const { return chain_edges_; }
  std::uint64_t mask() const { return mask_; }

  bool nontrivial() const { return !order_edges_.empty() && !chain_edges_.empty(); }
  bool is_order_edge(const Cover& c) const;

  // (cE, oE)
  EdgePartition complement() const;

  friend bool operator==(const EdgePartition& a, const EdgePartition& b) {
    return a.base_ == b.base_ && a.mask_ == b.mask_;
  }

 private:
  Poset base_;
  std::vector<Cover> order_edges_;
  std::vector<Cover> chain_edges_;
  std::uint64_t mask_ = 0;
};

inline EdgePartition make_partition(const Poset& p, const std::vector<Cover>& order_edges) {
  return EdgePartition::make(p, order_edges);
}

// P'_l and P''_l: the base ground set with only the oE (resp. cE) covers.
Poset order_part(const EdgePartition& partition);
Poset chain_part(const EdgePartition& partition);

// All 2^|E| partitions, oE bitmask ascending over the sorted cover list.
void for_each_partition(const Poset& p, const std::function<void(const EdgePartition&)>& visit,
                        const Limits& limits = {});
std::vector<EdgePartition> enumerate_partitions(const Poset& p, const Limits& limits = {});

// True when the undirected Hasse graph has no cycle.
bool is_hasse_forest(const Poset& p);

// cE = edges incident to an element of `minimal_subset`, oE = the rest.
EdgePartition minimal_incident_partition(const Poset& p, const ElementSet& minimal_subset);

// oE = {1,2},{3,4},... on the chain 1 < 2 < ... < n.
EdgePartition alternating_chain_partition(int n);

}  // namespace ocpoly
