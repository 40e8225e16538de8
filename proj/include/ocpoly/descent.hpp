#pragma once

#include <cstdint>
#include <vector>

#include "ocpoly/edge_partition.hpp"
#include "ocpoly/limits.hpp"
#include "ocpoly/poset.hpp"
#include "ocpoly/rational.hpp"

namespace ocpoly {

// Lengths of the maximal blocks of [n-1] lying alternately in S and out of
// S; `starts_in_set` says which side the first block is on.
struct RunList {
  int n = 1;
  std::vector<int> parts;
  bool starts_in_set = false;
  friend bool operator==(const RunList&, const RunList&) = default;
};

RunList runs(const DescentSet& s);
DescentSet subset_from_runs(const RunList& runs);

// Permutations of [n] with descent set exactly S, by signed multinomial
// inclusion-exclusion over subsets of S.
Integer beta(const DescentSet& s, const Limits& limits = {});
// The same count by sweeping all n! permutations.
Integer beta_brute_force(const DescentSet& s, const Limits& limits = {});

// F_1 = F_2 = 1.
Integer fibonacci(int n);

// Subsets whose run-list interior parts are all >= 2, in (size, lex) order.
std::vector<DescentSet> family_F(int n, const Limits& limits = {});

struct BetaMaximum {
  std::vector<DescentSet> argmaxes;  // (size, lex) order
  Integer value;
};
BetaMaximum max_beta_over_F(int n, const Limits& limits = {});

// The run-lists (1,2,...,2) and (2,...,2,1) for even n, (1,2,...,2,1) for
// odd n, as descent sets (both phases).
std::vector<DescentSet> predicted_beta_maximizers(int n);

// Largest product of positive parts summing to d, parts descending; ties
// keep the lexicographically smallest descending list.
struct ProductComposition {
  std::vector<int> parts;
  std::int64_t product = 0;
};
ProductComposition max_product_composition(int d);
// 3^k, 4 * 3^(k-1), 2 * 3^k by d mod 3 (d >= 2).
std::int64_t max_product_closed_form(int d);

// The zigzag Q with OC_l(chain) unimodularly equivalent to C(Q), from the
// interval structure of the partition.
Poset chain_partition_zigzag(const EdgePartition& partition);

struct ChainPartitionSearch {
  std::vector<EdgePartition> argmaxes;  // ascending bitmask
  Rational volume;
  std::vector<Rational> volumes;        // indexed by bitmask
};
// Every edge partition of the n-chain, volumes from exact geometry.
ChainPartitionSearch best_chain_partition(int n, const Limits& limits = {});

}  // namespace ocpoly
