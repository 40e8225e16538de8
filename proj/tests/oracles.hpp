#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library beyond reading a poset's cover list, so they
// stay independent of the code paths they check.

#include <cstdint>
#include <vector>

#include "ocpoly/geometry.hpp"
#include "ocpoly/poset.hpp"

namespace oracle {

// less[i][j] for 1-based i, j via Warshall closure of the covers.
std::vector<std::vector<bool>> strict_order(const ocpoly::Poset& p);

std::vector<ocpoly::ElementSet> ideals(const ocpoly::Poset& p);
std::vector<ocpoly::ElementSet> antichains(const ocpoly::Poset& p);
std::uint64_t linear_extensions(const ocpoly::Poset& p);

// Every feasible intersection point of d independent tight hyperplanes.
std::vector<ocpoly::Point> subset_vertices(const ocpoly::HalfspaceSystem& system);

// Integer points of t*P by scanning [0, t]^d.
std::int64_t box_lattice_points(const ocpoly::HalfspaceSystem& system, int t);

// Number of isomorphism classes of posets on n points, from all naturally
// labeled strict orders deduplicated by minimum relation code over all n!
// relabelings.
int poset_classes_brute_force(int n);

// Number of permutations of [n] with descent set exactly `s`.
std::uint64_t descent_count(int n, const std::vector<int>& s);

}  // namespace oracle
