#include "ocpoly/edge_partition.hpp"

#include <algorithm>
#include <numeric>

#include "ocpoly/error.hpp"

namespace ocpoly {

EdgePartition EdgePartition::make(const Poset& base, const std::vector<Cover>& order_edges) {
  std::uint64_t mask = 0;
  const auto& covers = base.covers();
  for (const auto& e : order_edges) {
    auto it = std::lower_bound(covers.begin(), covers.end(), e);
    if (it == covers.end() || *it != e) {
      Cover flipped{e.upper, e.lower};
      it = std::lower_bound(covers.begin(), covers.end(), flipped);
      if (it == covers.end() || *it != flipped)
        fail(ErrorKind::UnknownEdge, "{" + std::to_string(e.lower) + "," +
                                         std::to_string(e.upper) + "} is not a Hasse edge");
    }
    mask |= std::uint64_t{1} << (it - covers.begin());
  }
  return from_mask(base, mask);
}

EdgePartition EdgePartition::from_mask(const Poset& base, std::uint64_t mask) {
  const auto& covers = base.covers();
  if (covers.size() > 64) fail(ErrorKind::LimitExceeded, "more than 64 Hasse edges");
  if (covers.size() < 64 && (mask >> covers.size()) != 0)
    fail(ErrorKind::UnknownEdge, "partition mask names a missing edge");
  EdgePartition out;
  out.base_ = base;
  out.mask_ = mask;
  for (std::size_t k = 0; k < covers.size(); ++k) {
    if ((mask >> k) & 1U)
      out.order_edges_.push_back(covers[k]);
    else
      out.chain_edges_.push_back(covers[k]);
  }
  return out;
}

bool EdgePartition::is_order_edge(const Cover& c) const {
  return std::binary_search(order_edges_.begin(), order_edges_.end(), c);
}

EdgePartition EdgePartition::complement() const {
  const std::size_t m = base_.covers().size();
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  return from_mask(base_, ~mask_ & all);
}

Poset order_part(const EdgePartition& partition) {
  return Poset::from_covers(partition.base().size(), partition.order_edges());
}

Poset chain_part(const EdgePartition& partition) {
  return Poset::from_covers(partition.base().size(), partition.chain_edges());
}

void for_each_partition(const Poset& p, const std::function<void(const EdgePartition&)>& visit,
                        const Limits& limits) {
  const auto m = static_cast<int>(p.covers().size());
  if (m > limits.max_partition_edges)
    fail(ErrorKind::LimitExceeded, "partition enumeration capped at |E| <= " +
                                       std::to_string(limits.max_partition_edges));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    visit(EdgePartition::from_mask(p, mask));
}

std::vector<EdgePartition> enumerate_partitions(const Poset& p, const Limits& limits) {
  std::vector<EdgePartition> out;
  for_each_partition(p, [&](const EdgePartition& l) { out.push_back(l); }, limits);
  return out;
}

bool is_hasse_forest(const Poset& p) {
  std::vector<int> parent(p.size() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : p.covers()) {
    int a = find(c.lower), b = find(c.upper);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

EdgePartition minimal_incident_partition(const Poset& p, const ElementSet& minimal_subset) {
  for (int s : minimal_subset) {
    if (s < 1 || s > p.size())
      fail(ErrorKind::IndexOutOfRange, std::to_string(s) + " is not an element");
    if (!p.is_minimal(s)) fail(ErrorKind::NotMinimal, std::to_string(s) + " is not minimal");
  }
  std::vector<Cover> order_edges;
  for (const auto& c : p.covers()) {
    bool incident = std::find(minimal_subset.begin(), minimal_subset.end(), c.lower) !=
                    minimal_subset.end();
    if (!incident) order_edges.push_back(c);
  }
  return EdgePartition::make(p, order_edges);
}

EdgePartition alternating_chain_partition(int n) {
  std::vector<Cover> order_edges;
  for (int i = 1; i + 1 <= n; i += 2) order_edges.push_back({i, i + 1});
  return EdgePartition::make(chain_poset(n), order_edges);
}

}  // namespace ocpoly
