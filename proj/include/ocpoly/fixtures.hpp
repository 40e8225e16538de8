#pragma once

// Named posets and partitions used by the verification suites, the tests
// and the CLI documentation.

#include "ocpoly/edge_partition.hpp"
#include "ocpoly/poset.hpp"

namespace ocpoly::fixtures {

// 1 < 2, 1 < 3, 2 < 4, 3 < 4: Hasse diagram is a 4-cycle.
Poset diamond_poset();
// oE = {12, 24, 34}, cE = {13}: has the vertex (1/2, 1/2, 1/2, 1/2).
EdgePartition diamond_half_partition();
// oE = {13}, cE = {12, 24, 34}.
EdgePartition diamond_integral_partition();

// Chain 1 < ... < 7 with oE = {12, 45, 56}.
EdgePartition seven_chain_partition();

// 1 < 2, 1 < 3, 3 < 4.
Poset fork_poset();
// oE = {12}: volume 1/24.
EdgePartition fork_small_partition();
// oE = {12, 13}: volume 5/24.
EdgePartition fork_large_partition();

// 1, 2 < 3 < 4, 5: the five-element X.
Poset x_poset();
// oE = {13, 34, 35}, cE = {23}.
EdgePartition x_partition();

// d = 6: three levels of two, completely joined. For d > 6 an extra element
// 7 covers 5 and 6 and a chain 7 < 8 < ... < d sits on top.
Poset new_type_poset(int d);
// oE = {35, 36} for d = 6, plus {57, 67, 78, ..., (d-1)d} above.
EdgePartition new_type_partition(int d);

}  // namespace ocpoly::fixtures
