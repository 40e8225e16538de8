#include "ocpoly/fixtures.hpp"

#include "ocpoly/error.hpp"

namespace ocpoly::fixtures {

Poset diamond_poset() { return Poset::from_covers(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

EdgePartition diamond_half_partition() {
  return EdgePartition::make(diamond_poset(), {{1, 2}, {2, 4}, {3, 4}});
}

EdgePartition diamond_integral_partition() {
  return EdgePartition::make(diamond_poset(), {{1, 3}});
}

EdgePartition seven_chain_partition() {
  return EdgePartition::make(chain_poset(7), {{1, 2}, {4, 5}, {5, 6}});
}

Poset fork_poset() { return Poset::from_covers(4, {{1, 2}, {1, 3}, {3, 4}}); }

EdgePartition fork_small_partition() { return EdgePartition::make(fork_poset(), {{1, 2}}); }

EdgePartition fork_large_partition() {
  return EdgePartition::make(fork_poset(), {{1, 2}, {1, 3}});
}

Poset x_poset() { return Poset::from_covers(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}); }

EdgePartition x_partition() { return EdgePartition::make(x_poset(), {{1, 3}, {3, 4}, {3, 5}}); }

Poset new_type_poset(int d) {
  if (d < 6) fail(ErrorKind::InvalidArgument, "the family starts at d = 6");
  std::vector<Cover> covers{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  if (d > 6) {
    covers.push_back({5, 7});
    covers.push_back({6, 7});
    for (int i = 7; i < d; ++i) covers.push_back({i, i + 1});
  }
  return Poset::from_covers(d, covers);
}

EdgePartition new_type_partition(int d) {
  std::vector<Cover> order_edges{{3, 5}, {3, 6}};
  if (d > 6) {
    order_edges.push_back({5, 7});
    order_edges.push_back({6, 7});
    for (int i = 7; i < d; ++i) order_edges.push_back({i, i + 1});
  }
  return EdgePartition::make(new_type_poset(d), order_edges);
}

}  // namespace ocpoly::fixtures
