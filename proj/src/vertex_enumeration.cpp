#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"
#include "ocpoly/linalg.hpp"

namespace ocpoly {
namespace {

using Ray = std::vector<Integer>;
using Bits = boost::dynamic_bitset<>;

// b*t - a.x >= 0 scaled to integers; the homogenizing coordinate t is first.
std::vector<Integer> homogenized_row(const Halfspace& h) {
  Integer scale = h.bound.get_den();
  for (const auto& a : h.coefficients) scale = lcm(scale, Integer(a.get_den()));
  std::vector<Integer> row;
  row.reserve(h.coefficients.size() + 1);
  row.push_back(Integer(h.bound.get_num() * (scale / h.bound.get_den())));
  for (const auto& a : h.coefficients) row.push_back(Integer(-a.get_num() * (scale / a.get_den())));
  return row;
}

Integer dot(const std::vector<Integer>& row, const Ray& ray) {
  Integer sum = 0;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0 && ray[k] != 0) sum += row[k] * ray[k];
  return sum;
}

void make_primitive(Ray& ray) {
  Integer g = 0;
  for (const auto& x : ray) g = gcd(g, Integer(abs(x)));
  if (g > 1)
    for (auto& x : ray) x /= g;
}

}  // namespace

VertexSet VertexSet::make(int dimension, std::vector<Point> points) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dimension)
      fail(ErrorKind::DimensionMismatch, "vertex of wrong length");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return VertexSet{dimension, std::move(points)};
}

bool VertexSet::contains(const Point& p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

VertexSet enumerate_vertices(const HalfspaceSystem& system, const Limits& limits) {
  const int d = system.dimension;
  if (d < 1) fail(ErrorKind::InvalidArgument, "dimension must be positive");
  if (d > limits.max_vertex_dimension)
    fail(ErrorKind::LimitExceeded,
         "vertex enumeration capped at d <= " + std::to_string(limits.max_vertex_dimension));
  for (const auto& h : system.halfspaces)
    if (static_cast<int>(h.coefficients.size()) != d)
      fail(ErrorKind::DimensionMismatch, "halfspace length differs from system dimension");

  std::vector<std::vector<Integer>> rows;
  for (const auto& h : system.halfspaces) rows.push_back(homogenized_row(h));
  {
    std::vector<Integer> t_nonnegative(d + 1, 0);
    t_nonnegative[0] = 1;
    rows.push_back(std::move(t_nonnegative));
  }
  const std::size_t m = rows.size();
  const int cone_dim = d + 1;

  // Initial simplicial cone from the first independent rows.
  std::vector<std::size_t> basis;
  Matrix basis_rows;
  for (std::size_t j = 0; j < m && static_cast<int>(basis.size()) < cone_dim; ++j) {
    std::vector<Rational> r(rows[j].begin(), rows[j].end());
    basis_rows.push_back(r);
    if (rank(basis_rows) == static_cast<int>(basis_rows.size())) {
      basis.push_back(j);
    } else {
      basis_rows.pop_back();
    }
  }
  if (static_cast<int>(basis.size()) < cone_dim)
    fail(ErrorKind::Unbounded, "inequalities do not bound a polytope");
  auto inv = inverse(basis_rows);

  std::vector<Ray> rays;
  std::vector<Bits> tight;
  for (int k = 0; k < cone_dim; ++k) {
    Integer scale = 1;
    for (int i = 0; i < cone_dim; ++i) scale = lcm(scale, Integer((*inv)[i][k].get_den()));
    Ray ray(cone_dim);
    for (int i = 0; i < cone_dim; ++i) {
      Rational v = (*inv)[i][k] * scale;
      ray[i] = v.get_num();
    }
    make_primitive(ray);
    Bits bits(m);
    for (int i = 0; i < cone_dim; ++i)
      if (i != k) bits.set(basis[i]);
    rays.push_back(std::move(ray));
    tight.push_back(std::move(bits));
  }

  std::vector<bool> processed(m, false);
  for (auto j : basis) processed[j] = true;

  std::vector<Integer> values;
  for (std::size_t j = 0; j < m; ++j) {
    if (processed[j]) continue;
    const auto& row = rows[j];
    values.assign(rays.size(), 0);
    std::vector<std::size_t> positive, negative, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = dot(row, rays[r]);
      int s = sgn(values[r]);
      (s > 0 ? positive : s < 0 ? negative : zero).push_back(r);
    }
    for (auto z : zero) tight[z].set(j);
    if (negative.empty()) continue;

    std::vector<Ray> next_rays;
    std::vector<Bits> next_tight;
    for (auto p : positive) {
      for (auto n : negative) {
        Bits common = tight[p] & tight[n];
        if (static_cast<int>(common.count()) < cone_dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray(cone_dim);
        for (int k = 0; k < cone_dim; ++k) ray[k] = values[p] * rays[n][k] - values[n] * rays[p][k];
        make_primitive(ray);
        common.set(j);
        next_rays.push_back(std::move(ray));
        next_tight.push_back(std::move(common));
      }
    }
    std::vector<Ray> kept_rays;
    std::vector<Bits> kept_tight;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (values[r] < 0) continue;
      kept_rays.push_back(std::move(rays[r]));
      kept_tight.push_back(std::move(tight[r]));
    }
    for (std::size_t r = 0; r < next_rays.size(); ++r) {
      kept_rays.push_back(std::move(next_rays[r]));
      kept_tight.push_back(std::move(next_tight[r]));
    }
    rays = std::move(kept_rays);
    tight = std::move(kept_tight);
  }

  std::vector<Point> points;
  bool recession = false;
  for (const auto& ray : rays) {
    if (ray[0] == 0) {
      recession = true;
      continue;
    }
    Point p(d);
    for (int k = 0; k < d; ++k) {
      p[k] = Rational(ray[k + 1], ray[0]);
      p[k].canonicalize();
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) fail(ErrorKind::EmptyPolytope, "inequality system is infeasible");
  if (recession) fail(ErrorKind::Unbounded, "inequalities do not bound a polytope");
  return VertexSet::make(d, std::move(points));
}

}  // namespace ocpoly
