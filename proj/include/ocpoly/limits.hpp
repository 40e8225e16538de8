#pragma once

#include <cstdint>

namespace ocpoly {

// Caps on the exhaustive procedures. Every operation that enumerates
// something exponential checks the relevant field and throws
// ErrorKind::LimitExceeded instead of running unbounded.
struct Limits {
  int max_poset_elements = 64;          // hard representation limit
  int max_extension_elements = 16;      // linear extension DP
  int max_subset_elements = 24;         // ideal / antichain listing
  int max_iso_elements = 6;             // isomorphism-class enumeration
  int max_partition_edges = 20;         // 2^|E| partition streams
  int max_vertex_dimension = 8;         // vertex enumeration / volume
  std::int64_t max_lattice_scan = 10'000'000;     // points scanned per count
  std::int64_t equivalence_budget = 10'000'000;  // candidate base images
  int max_beta_brute_force = 9;         // permutation sweep for beta
  int max_beta_n = 12;                  // inclusion-exclusion for beta
  int max_family_n = 20;                // F(n) enumeration
  int max_descent_search_n = 10;        // max beta over F(n)
  int max_chain_search_n = 8;           // OC volume search on chains
};

}  // namespace ocpoly
