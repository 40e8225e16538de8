#include "ocpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "ocpoly/error.hpp"

namespace ocpoly {
namespace {

std::uint64_t bit(int element) { return std::uint64_t{1} << (element - 1); }

ElementSet mask_to_set(std::uint64_t mask) {
  ElementSet out;
  while (mask) {
    int b = std::countr_zero(mask);
    out.push_back(b + 1);
    mask &= mask - 1;
  }
  return out;
}

// (size, lexicographic)
bool subset_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Elements sorted so that every element comes after everything below it.
std::vector<int> topological_order(const Poset& p) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.strictly_below(a)) < std::popcount(p.strictly_below(b));
  });
  return order;
}

void check_subset_cap(const Poset& p, const Limits& limits) {
  if (p.size() > limits.max_subset_elements)
    fail(ErrorKind::LimitExceeded,
         "subset enumeration capped at d <= " + std::to_string(limits.max_subset_elements));
}

}  // namespace

Poset Poset::from_covers(int d, std::vector<Cover> covers, const Limits& limits) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "poset needs d >= 1");
  int cap = std::min(limits.max_poset_elements, 64);
  if (d > cap) fail(ErrorKind::LimitExceeded, "poset size capped at " + std::to_string(cap));
  for (const auto& c : covers) {
    if (c.lower < 1 || c.lower > d || c.upper < 1 || c.upper > d)
      fail(ErrorKind::IndexOutOfRange, "cover (" + std::to_string(c.lower) + "," +
                                           std::to_string(c.upper) + ") outside [" +
                                           std::to_string(d) + "]");
    if (c.lower == c.upper)
      fail(ErrorKind::DirectedCycle, "self cover on element " + std::to_string(c.lower));
  }
  std::sort(covers.begin(), covers.end());
  auto dup = std::adjacent_find(covers.begin(), covers.end());
  if (dup != covers.end())
    fail(ErrorKind::DuplicateCover, "cover (" + std::to_string(dup->lower) + "," +
                                        std::to_string(dup->upper) + ") listed twice");

  Poset p;
  p.d_ = d;
  p.covers_ = std::move(covers);
  p.upper_.assign(d, {});
  p.lower_.assign(d, {});
  for (const auto& c : p.covers_) {
    p.upper_[c.lower - 1].push_back(c.upper);
    p.lower_[c.upper - 1].push_back(c.lower);
  }
  for (auto& v : p.upper_) std::sort(v.begin(), v.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; closure is accumulated along the way.
  std::vector<int> indegree(d);
  for (int i = 0; i < d; ++i) indegree[i] = static_cast<int>(p.lower_[i].size());
  std::vector<int> queue;
  for (int i = 0; i < d; ++i)
    if (indegree[i] == 0) queue.push_back(i + 1);
  p.below_.assign(d, 0);
  std::size_t head = 0;
  while (head < queue.size()) {
    int i = queue[head++];
    for (int j : p.upper_[i - 1]) {
      p.below_[j - 1] |= p.below_[i - 1] | bit(i);
      if (--indegree[j - 1] == 0) queue.push_back(j);
    }
  }
  if (static_cast<int>(queue.size()) != d)
    fail(ErrorKind::DirectedCycle, "cover relation contains a directed cycle");

  for (const auto& c : p.covers_) {
    for (int k : p.lower_[c.upper - 1]) {
      if (k != c.lower && (p.below_[k - 1] & bit(c.lower)))
        fail(ErrorKind::TransitiveCover, "cover (" + std::to_string(c.lower) + "," +
                                             std::to_string(c.upper) + ") is implied via " +
                                             std::to_string(k));
    }
  }
  p.above_.assign(d, 0);
  for (int j = 1; j <= d; ++j) {
    std::uint64_t m = p.below_[j - 1];
    while (m) {
      int b = std::countr_zero(m);
      p.above_[b] |= bit(j);
      m &= m - 1;
    }
  }
  return p;
}

bool Poset::has_cover(int lower, int upper) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{lower, upper});
}

Poset chain_poset(int n) {
  std::vector<Cover> covers;
  for (int i = 1; i < n; ++i) covers.push_back({i, i + 1});
  return Poset::from_covers(n, covers);
}

Poset antichain_poset(int n) { return Poset::from_covers(n, {}); }

Poset complete_bipartite_poset(int lower, int upper) {
  return leveled_poset({lower, upper});
}

Poset leveled_poset(const std::vector<int>& level_sizes) {
  std::vector<Cover> covers;
  int start = 1, d = 0;
  for (std::size_t level = 0; level < level_sizes.size(); ++level) {
    int size = level_sizes[level];
    if (size < 1) fail(ErrorKind::InvalidArgument, "level sizes must be positive");
    if (level > 0) {
      int prev = level_sizes[level - 1];
      for (int a = start - prev; a < start; ++a)
        for (int b = start; b < start + size; ++b) covers.push_back({a, b});
    }
    start += size;
    d += size;
  }
  return Poset::from_covers(d, covers);
}

DescentSet DescentSet::make(int n, ElementSet elements) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "descent set needs n >= 1");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int j : elements)
    if (j < 1 || j > n - 1)
      fail(ErrorKind::IndexOutOfRange,
           std::to_string(j) + " is not in [" + std::to_string(n - 1) + "]");
  return DescentSet{n, std::move(elements)};
}

bool DescentSet::contains(int j) const {
  return std::binary_search(elements.begin(), elements.end(), j);
}

DescentSet DescentSet::complement() const {
  ElementSet out;
  for (int j = 1; j < n; ++j)
    if (!contains(j)) out.push_back(j);
  return DescentSet{n, out};
}

std::vector<ElementSet> order_ideals(const Poset& p, const Limits& limits) {
  check_subset_cap(p, limits);
  const auto order = topological_order(p);
  std::vector<ElementSet> out;
  // Depth-first over the topological order; an element may join only when
  // everything below it is already present.
  auto recurse = [&](auto&& self, std::size_t k, std::uint64_t mask) -> void {
    if (k == order.size()) {
      out.push_back(mask_to_set(mask));
      return;
    }
    int e = order[k];
    self(self, k + 1, mask);
    if ((p.strictly_below(e) & ~mask) == 0) self(self, k + 1, mask | bit(e));
  };
  recurse(recurse, 0, 0);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<ElementSet> antichains(const Poset& p, const Limits& limits) {
  check_subset_cap(p, limits);
  std::vector<ElementSet> out;
  const int d = p.size();
  auto recurse = [&](auto&& self, int e, std::uint64_t mask) -> void {
    if (e > d) {
      out.push_back(mask_to_set(mask));
      return;
    }
    self(self, e + 1, mask);
    if (((p.strictly_below(e) | p.strictly_above(e)) & mask) == 0)
      self(self, e + 1, mask | bit(e));
  };
  recurse(recurse, 1, 0);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  Chain current;
  auto walk = [&](auto&& self, int e) -> void {
    current.push_back(e);
    if (p.is_maximal(e)) {
      out.push_back(current);
    } else {
      for (int u : p.upper_covers(e)) self(self, u);
    }
    current.pop_back();
  };
  for (int e = 1; e <= p.size(); ++e)
    if (p.is_minimal(e)) walk(walk, e);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t maximal_chain_count(const Poset& p) {
  // paths from each element up to a maximal element, top-down
  auto order = topological_order(p);
  std::vector<std::uint64_t> up(p.size() + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int e = *it;
    if (p.is_maximal(e)) {
      up[e] = 1;
    } else {
      for (int u : p.upper_covers(e)) up[e] += up[u];
    }
  }
  std::uint64_t total = 0;
  for (int e = 1; e <= p.size(); ++e)
    if (p.is_minimal(e)) total += up[e];
  return total;
}

std::uint64_t linear_extensions_count(const Poset& p, const Limits& limits) {
  const int d = p.size();
  int cap = std::min(limits.max_extension_elements, 20);
  if (d > cap)
    fail(ErrorKind::LimitExceeded,
         "linear extension count capped at d <= " + std::to_string(cap));
  const std::size_t states = std::size_t{1} << d;
  std::vector<std::uint64_t> ways(states, 0);
  ways[0] = 1;
  for (std::size_t mask = 0; mask < states; ++mask) {
    if (!ways[mask]) continue;
    for (int e = 1; e <= d; ++e) {
      if (mask & bit(e)) continue;
      if ((p.strictly_below(e) & ~mask) != 0) continue;
      ways[mask | bit(e)] += ways[mask];
    }
  }
  return ways[states - 1];
}

Poset zigzag_from_descent_set(const DescentSet& s) {
  DescentSet checked = DescentSet::make(s.n, s.elements);
  std::vector<Cover> covers;
  for (int j = 1; j < checked.n; ++j) {
    if (checked.contains(j))
      covers.push_back({j + 1, j});
    else
      covers.push_back({j, j + 1});
  }
  return Poset::from_covers(checked.n, covers);
}

bool is_zigzag(const Poset& p) {
  const int n = p.size();
  if (static_cast<int>(p.covers().size()) != n - 1) return false;
  std::vector<bool> seen(n, false);
  for (const auto& c : p.covers()) {
    int lo = std::min(c.lower, c.upper), hi = std::max(c.lower, c.upper);
    if (hi != lo + 1 || seen[lo]) return false;
    seen[lo] = true;
  }
  return true;
}

DescentSet descent_set_of_zigzag(const Poset& p) {
  if (!is_zigzag(p))
    fail(ErrorKind::NotZigzag, "covers are not exactly the consecutive pairs {j, j+1}");
  ElementSet s;
  for (const auto& c : p.covers())
    if (c.lower == c.upper + 1) s.push_back(c.upper);
  std::sort(s.begin(), s.end());
  return DescentSet{p.size(), s};
}

Poset dual_poset(const Poset& p) {
  std::vector<Cover> covers;
  for (const auto& c : p.covers()) covers.push_back({c.upper, c.lower});
  return Poset::from_covers(p.size(), covers);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<Cover> covers = p.covers();
  for (const auto& c : q.covers()) covers.push_back({c.lower + p.size(), c.upper + p.size()});
  return Poset::from_covers(p.size() + q.size(), covers);
}

Poset relabel(const Poset& p, const std::vector<int>& new_label) {
  const int d = p.size();
  if (static_cast<int>(new_label.size()) != d)
    fail(ErrorKind::DimensionMismatch, "relabeling has wrong length");
  std::vector<bool> used(d + 1, false);
  for (int l : new_label) {
    if (l < 1 || l > d || used[l]) fail(ErrorKind::InvalidArgument, "relabeling is not a permutation");
    used[l] = true;
  }
  std::vector<Cover> covers;
  for (const auto& c : p.covers()) covers.push_back({new_label[c.lower - 1], new_label[c.upper - 1]});
  return Poset::from_covers(d, covers);
}

ElementSet minimal_elements(const Poset& p) {
  ElementSet out;
  for (int e = 1; e <= p.size(); ++e)
    if (p.is_minimal(e)) out.push_back(e);
  return out;
}

ElementSet maximal_elements(const Poset& p) {
  ElementSet out;
  for (int e = 1; e <= p.size(); ++e)
    if (p.is_maximal(e)) out.push_back(e);
  return out;
}

PosetStats poset_stats(const Poset& p) {
  return PosetStats{static_cast<int>(minimal_elements(p).size()),
                    static_cast<int>(maximal_elements(p).size()),
                    static_cast<int>(p.covers().size()), maximal_chain_count(p)};
}

std::string describe(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << " {";
  bool first = true;
  for (const auto& c : p.covers()) {
    out << (first ? "" : ", ") << c.lower << "<" << c.upper;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace ocpoly
