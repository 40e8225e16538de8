#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using ocpoly::Point;
using ocpoly::Rational;

std::vector<std::vector<bool>> strict_order(const ocpoly::Poset& p) {
  const int d = p.size();
  std::vector<std::vector<bool>> less(d + 1, std::vector<bool>(d + 1, false));
  for (const auto& c : p.covers()) less[c.lower][c.upper] = true;
  for (int k = 1; k <= d; ++k)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        if (less[i][k] && less[k][j]) less[i][j] = true;
  return less;
}

namespace {

std::vector<ocpoly::ElementSet> filter_subsets(int d, auto keep) {
  std::vector<ocpoly::ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    ocpoly::ElementSet s;
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    if (keep(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Solves the square system m x = rhs; false when singular.
bool solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, Point& x) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

}  // namespace

std::vector<ocpoly::ElementSet> ideals(const ocpoly::Poset& p) {
  auto less = strict_order(p);
  return filter_subsets(p.size(), [&](const ocpoly::ElementSet& s) {
    for (int i : s)
      for (int j = 1; j <= p.size(); ++j)
        if (less[j][i] && std::find(s.begin(), s.end(), j) == s.end()) return false;
    return true;
  });
}

std::vector<ocpoly::ElementSet> antichains(const ocpoly::Poset& p) {
  auto less = strict_order(p);
  return filter_subsets(p.size(), [&](const ocpoly::ElementSet& s) {
    for (int i : s)
      for (int j : s)
        if (less[i][j]) return false;
    return true;
  });
}

std::uint64_t linear_extensions(const ocpoly::Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    std::vector<int> pos(p.size() + 1);
    for (std::size_t k = 0; k < perm.size(); ++k) pos[perm[k]] = static_cast<int>(k);
    bool ok = true;
    for (const auto& c : p.covers())
      if (pos[c.lower] > pos[c.upper]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<Point> subset_vertices(const ocpoly::HalfspaceSystem& system) {
  const int d = system.dimension;
  const int m = static_cast<int>(system.halfspaces.size());
  std::set<Point> found;
  std::vector<int> pick(d);
  auto recurse = [&](auto&& self, int start, int depth) -> void {
    if (depth == d) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int idx : pick) {
        a.push_back(system.halfspaces[idx].coefficients);
        b.push_back(system.halfspaces[idx].bound);
      }
      Point x;
      if (!solve(a, b, x)) return;
      for (const auto& h : system.halfspaces) {
        Rational s = 0;
        for (int k = 0; k < d; ++k) s += h.coefficients[k] * x[k];
        if (s > h.bound) return;
      }
      found.insert(x);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
  return {found.begin(), found.end()};
}

std::int64_t box_lattice_points(const ocpoly::HalfspaceSystem& system, int t) {
  const int d = system.dimension;
  std::vector<int> z(d, 0);
  std::int64_t count = 0;
  while (true) {
    bool inside = true;
    for (const auto& h : system.halfspaces) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) s += h.coefficients[k] * z[k];
      if (s > h.bound * t) inside = false;
    }
    if (inside) ++count;
    int k = 0;
    while (k < d && z[k] == t) z[k++] = 0;
    if (k == d) break;
    ++z[k];
  }
  return count;
}

int poset_classes_brute_force(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> classes;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) rel[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
    if (!transitive) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& q : perms) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[i][j]) code |= std::uint64_t{1} << (q[i] * n + q[j]);
      best = std::min(best, code);
    }
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

std::uint64_t descent_count(int n, const std::vector<int>& s) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    std::vector<int> des;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) des.push_back(i + 1);
    if (des == s) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
