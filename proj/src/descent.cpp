#include "ocpoly/descent.hpp"

#include <algorithm>
#include <numeric>

#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"

namespace ocpoly {
namespace {

std::uint32_t mask_of(const DescentSet& s) {
  std::uint32_t m = 0;
  for (int j : s.elements) m |= 1U << (j - 1);
  return m;
}

DescentSet set_of(int n, std::uint32_t mask) {
  ElementSet e;
  for (int j = 1; j < n; ++j)
    if (mask >> (j - 1) & 1U) e.push_back(j);
  return DescentSet::make(n, std::move(e));
}

bool size_lex_less(const DescentSet& a, const DescentSet& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

void check_n(int n, int cap, const char* what) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n > cap)
    fail(ErrorKind::LimitExceeded, std::string(what) + " is capped at n = " + std::to_string(cap));
}

bool interior_parts_at_least_two(const RunList& r) {
  for (std::size_t i = 1; i + 1 < r.parts.size(); ++i)
    if (r.parts[i] < 2) return false;
  return true;
}

void partitions(int remaining, int largest, std::vector<int>& parts, ProductComposition& best) {
  if (remaining == 0) {
    std::int64_t product = 1;
    for (int p : parts) product *= p;
    // visited in lexicographically descending order, so a later tie is
    // lexicographically smaller
    if (product >= best.product) {
      best.product = product;
      best.parts = parts;
    }
    return;
  }
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    parts.push_back(p);
    partitions(remaining - p, p, parts, best);
    parts.pop_back();
  }
}

}  // namespace

RunList runs(const DescentSet& s) {
  RunList r;
  r.n = s.n;
  if (s.n < 2) return r;
  r.starts_in_set = s.contains(1);
  bool current = r.starts_in_set;
  int length = 0;
  for (int j = 1; j < s.n; ++j) {
    if (s.contains(j) == current) {
      ++length;
    } else {
      r.parts.push_back(length);
      current = !current;
      length = 1;
    }
  }
  r.parts.push_back(length);
  return r;
}

DescentSet subset_from_runs(const RunList& r) {
  if (std::accumulate(r.parts.begin(), r.parts.end(), 0) != r.n - 1)
    fail(ErrorKind::InvalidArgument, "run lengths must sum to n - 1");
  ElementSet e;
  int j = 1;
  bool in = r.starts_in_set;
  for (int part : r.parts) {
    if (part < 1) fail(ErrorKind::InvalidArgument, "run lengths must be positive");
    for (int k = 0; k < part; ++k, ++j)
      if (in) e.push_back(j);
    in = !in;
  }
  return DescentSet::make(r.n, std::move(e));
}

Integer beta(const DescentSet& s, const Limits& limits) {
  check_n(s.n, limits.max_beta_n, "beta");
  const int n = s.n;
  const auto& e = s.elements;
  const std::size_t k = e.size();
  // beta(S) = sum over T in S of (-1)^{|S-T|} n! / prod (block lengths)!
  Integer total = 0;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    Integer term = factorial(n);
    int previous = 0, chosen = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      term /= factorial(e[i] - previous);
      previous = e[i];
      ++chosen;
    }
    term /= factorial(n - previous);
    if ((static_cast<int>(k) - chosen) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Integer beta_brute_force(const DescentSet& s, const Limits& limits) {
  check_n(s.n, limits.max_beta_brute_force, "brute-force beta");
  const int n = s.n;
  const std::uint32_t target = mask_of(s);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    std::uint32_t m = 0;
    for (int j = 1; j < n; ++j)
      if (perm[j - 1] > perm[j]) m |= 1U << (j - 1);
    if (m == target) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Integer(static_cast<unsigned long>(count));
}

Integer fibonacci(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "Fibonacci index must be positive");
  Integer a = 1, b = 1;
  for (int i = 3; i <= n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::vector<DescentSet> family_F(int n, const Limits& limits) {
  check_n(n, limits.max_family_n, "family F(n)");
  std::vector<DescentSet> out;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    auto s = set_of(n, mask);
    if (interior_parts_at_least_two(runs(s))) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

BetaMaximum max_beta_over_F(int n, const Limits& limits) {
  check_n(n, limits.max_descent_search_n, "maximum of beta over F(n)");
  BetaMaximum best;
  best.value = -1;
  for (auto& s : family_F(n, limits)) {
    Integer b = beta(s, limits);
    if (b > best.value) {
      best.value = b;
      best.argmaxes.clear();
    }
    if (b == best.value) best.argmaxes.push_back(std::move(s));
  }
  return best;
}

std::vector<DescentSet> predicted_beta_maximizers(int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "n must be at least 2");
  std::vector<std::vector<int>> lists;
  const int m = n / 2;
  if (n % 2 == 0) {
    std::vector<int> a{1}, b;
    for (int i = 0; i < m - 1; ++i) {
      a.push_back(2);
      b.push_back(2);
    }
    b.push_back(1);
    lists = {a, b};
  } else {
    std::vector<int> a{1};
    for (int i = 0; i < m - 1; ++i) a.push_back(2);
    a.push_back(1);
    lists = {a};
  }
  std::vector<DescentSet> out;
  for (const auto& parts : lists)
    for (bool phase : {false, true}) {
      auto s = subset_from_runs(RunList{n, parts, phase});
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

ProductComposition max_product_composition(int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  if (d > 40) fail(ErrorKind::LimitExceeded, "product maximization is capped at d = 40");
  ProductComposition best;
  std::vector<int> parts;
  partitions(d, d, parts, best);
  return best;
}

std::int64_t max_product_closed_form(int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  if (d == 1) return 1;
  const int k = d / 3;
  std::int64_t p = 1;
  switch (d % 3) {
    case 0:
      for (int i = 0; i < k; ++i) p *= 3;
      return p;
    case 1:
      for (int i = 0; i < k - 1; ++i) p *= 3;
      return 4 * p;
    default:
      for (int i = 0; i < k; ++i) p *= 3;
      return 2 * p;
  }
}

Poset chain_partition_zigzag(const EdgePartition& partition) {
  const Poset& p = partition.base();
  const int d = p.size();
  for (const auto& c : p.covers())
    if (c.upper != c.lower + 1) fail(ErrorKind::NotChainUnion, "covers must all have the form (i, i+1)");

  // Per component [s, e], each maximal chain of P'' together with the
  // order segment hanging above it becomes one maximal chain of Q; a leading
  // order segment is a chain of Q on its own.
  std::vector<Cover> covers;
  int s = 1;
  while (s <= d) {
    int e = s;
    while (e < d && p.has_cover(e, e + 1)) ++e;
    std::vector<std::pair<int, int>> intervals;
    int i = s;
    while (i < e) {
      const bool order = partition.is_order_edge({i, i + 1});
      int j = i;
      while (j < e && partition.is_order_edge({j, j + 1}) == order) ++j;
      if (order) {
        if (i == s) intervals.emplace_back(i, j);
      } else {
        int top = j;
        while (top < e && partition.is_order_edge({top, top + 1})) ++top;
        intervals.emplace_back(i, top);
      }
      i = j;
    }
    bool ascending = true;
    for (auto [a, b] : intervals) {
      for (int k = a; k < b; ++k) covers.push_back(ascending ? Cover{k, k + 1} : Cover{k + 1, k});
      ascending = !ascending;
    }
    s = e + 1;
  }
  return new_poset(d, covers);
}

ChainPartitionSearch best_chain_partition(int n, const Limits& limits) {
  check_n(n, limits.max_chain_search_n, "chain partition search");
  ChainPartitionSearch result;
  result.volume = -1;
  for (const auto& l : enumerate_partitions(chain_poset(n), limits)) {
    Rational v = Polytope::build(hrep_order_chain(l), limits).volume(limits);
    result.volumes.push_back(v);
    if (v > result.volume) {
      result.volume = v;
      result.argmaxes.clear();
    }
    if (v == result.volume) result.argmaxes.push_back(l);
  }
  return result;
}

}  // namespace ocpoly
