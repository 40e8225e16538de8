#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ocpoly/limits.hpp"

namespace ocpoly {

// A cover pair: `upper` covers `lower` (lower ≺ upper, nothing in between).
// Elements are 1-based labels in [d].
struct Cover {
  int lower = 0;
  int upper = 0;
  auto operator<=>(const Cover&) const = default;
};

// Sorted 1-based element labels.
using ElementSet = std::vector<int>;
// Elements listed from bottom to top.
using Chain = std::vector<int>;

class Poset {
 public:
  Poset() = default;

  // Validates and stores a Hasse diagram. Throws IndexOutOfRange,
  // DuplicateCover, DirectedCycle or TransitiveCover.
  static Poset from_covers(int d, std::vector<Cover> covers,
                           const Limits& limits = {});

  int size() const { return d_; }
  const std::vector<Cover>& covers() const { return covers_; }

  const std::vector<int>& upper_covers(int i) const { return upper_[i - 1]; }
  const std::vector<int>& lower_covers(int i) const { return lower_[i - 1]; }

  bool has_cover(int lower, int upper) const;
  bool less(int i, int j) const { return (below_[j - 1] >> (i - 1)) & 1U; }
  bool comparable(int i, int j) const { return i == j || less(i, j) || less(j, i); }

  // Bitmasks over 0-based positions (bit i-1 stands for element i).
  std::uint64_t strictly_below(int i) const { return below_[i - 1]; }
  std::uint64_t strictly_above(int i) const { return above_[i - 1]; }

  bool is_minimal(int i) const { return lower_[i - 1].empty(); }
  bool is_maximal(int i) const { return upper_[i - 1].empty(); }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.d_ == b.d_ && a.covers_ == b.covers_;
  }

 private:
  int d_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
};

inline Poset new_poset(int d, std::vector<Cover> covers, const Limits& limits = {}) {
  return Poset::from_covers(d, std::move(covers), limits);
}

Poset chain_poset(int n);
Poset antichain_poset(int n);
// Every element of the lower block is covered by every element of the upper
// block; lower block is {1..lower}, upper block {lower+1..lower+upper}.
Poset complete_bipartite_poset(int lower, int upper);
// Levels of the given sizes stacked bottom to top, consecutive levels
// completely joined.
Poset leveled_poset(const std::vector<int>& level_sizes);

// Subsets of [n-1].
struct DescentSet {
  int n = 1;
  ElementSet elements;

  static DescentSet make(int n, ElementSet elements);
  bool contains(int j) const;
  DescentSet complement() const;
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

std::vector<ElementSet> order_ideals(const Poset& p, const Limits& limits = {});
std::vector<ElementSet> antichains(const Poset& p, const Limits& limits = {});
std::vector<Chain> maximal_chains(const Poset& p);
std::uint64_t maximal_chain_count(const Poset& p);

std::uint64_t linear_extensions_count(const Poset& p, const Limits& limits = {});

Poset zigzag_from_descent_set(const DescentSet& s);
bool is_zigzag(const Poset& p);
DescentSet descent_set_of_zigzag(const Poset& p);

Poset dual_poset(const Poset& p);
Poset disjoint_union(const Poset& p, const Poset& q);

// new_label[i-1] is the label element i receives; must be a permutation.
Poset relabel(const Poset& p, const std::vector<int>& new_label);

ElementSet minimal_elements(const Poset& p);
ElementSet maximal_elements(const Poset& p);

struct PosetStats {
  int min_count = 0;
  int max_count = 0;
  int edge_count = 0;
  std::uint64_t chain_count = 0;
  friend bool operator==(const PosetStats&, const PosetStats&) = default;
};
PosetStats poset_stats(const Poset& p);

// Isomorphism-invariant encoding. Two posets are isomorphic iff their codes
// are equal. `labeling[i-1]` is the label of element i in the canonical
// representative.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  std::vector<int> labeling;
};
CanonicalForm canonical_form(const Poset& p);
Poset canonical_poset(const Poset& p);
bool are_isomorphic(const Poset& p, const Poset& q);

// One canonical representative per isomorphism class on [n], sorted by
// canonical code.
std::vector<Poset> enumerate_posets_up_to_iso(int n, const Limits& limits = {});

std::string describe(const Poset& p);

}  // namespace ocpoly
