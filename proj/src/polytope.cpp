#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <limits>

#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"
#include "ocpoly/linalg.hpp"

namespace ocpoly {
namespace {

using Bits = boost::dynamic_bitset<>;

Bits tight_vertices(const Halfspace& h, const VertexSet& vertices) {
  Bits bits(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (evaluate(h, vertices.vertices[v]) == 0) bits.set(v);
  return bits;
}

int affine_rank_of(const Bits& subset, const VertexSet& vertices) {
  std::vector<const Point*> pts;
  for (auto v = subset.find_first(); v != Bits::npos; v = subset.find_next(v))
    pts.push_back(&vertices.vertices[v]);
  return affine_rank(pts);
}

class PullingTriangulation {
 public:
  PullingTriangulation(const VertexSet& vertices, std::vector<Bits> facets)
      : vertices_(vertices), facets_(std::move(facets)) {}

  Rational total_determinant() {
    Bits all(vertices_.size());
    all.set();
    std::vector<std::size_t> apex;
    visit(all, vertices_.dimension, apex);
    return sum_;
  }

 private:
  void visit(const Bits& face, int dim, std::vector<std::size_t>& apex) {
    if (static_cast<int>(face.count()) == dim + 1) {
      std::vector<std::size_t> simplex = apex;
      for (auto v = face.find_first(); v != Bits::npos; v = face.find_next(v)) simplex.push_back(v);
      add_simplex(simplex);
      return;
    }
    const std::size_t pulled = face.find_first();
    // facets of `face`: maximal proper intersections with the polytope's facets
    std::vector<Bits> candidates;
    for (const auto& f : facets_) {
      Bits cut = face & f;
      if (cut == face || cut.none()) continue;
      if (std::find(candidates.begin(), candidates.end(), cut) == candidates.end())
        candidates.push_back(std::move(cut));
    }
    apex.push_back(pulled);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Bits& c = candidates[i];
      if (c.test(pulled)) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < candidates.size() && maximal; ++k)
        if (k != i && c.is_proper_subset_of(candidates[k])) maximal = false;
      if (maximal) visit(c, dim - 1, apex);
    }
    apex.pop_back();
  }

  void add_simplex(const std::vector<std::size_t>& simplex) {
    const auto& origin = vertices_.vertices[simplex.front()];
    Matrix m;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      const auto& v = vertices_.vertices[simplex[i]];
      std::vector<Rational> row(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) row[k] = v[k] - origin[k];
      m.push_back(std::move(row));
    }
    sum_ += abs(determinant(std::move(m)));
  }

  const VertexSet& vertices_;
  std::vector<Bits> facets_;
  Rational sum_ = 0;
};

}  // namespace

std::vector<Halfspace> facet_halfspaces(const HalfspaceSystem& system, const VertexSet& vertices) {
  if (system.dimension != vertices.dimension)
    fail(ErrorKind::DimensionMismatch, "system and vertex set differ in dimension");
  if (polytope_dimension(vertices) != vertices.dimension)
    fail(ErrorKind::NotFullDimensional, "facets are defined for full-dimensional polytopes only");
  std::vector<Halfspace> out;
  std::vector<Bits> seen;
  for (const auto& h : system.halfspaces) {
    Bits bits = tight_vertices(h, vertices);
    if (bits.none()) continue;
    if (affine_rank_of(bits, vertices) != vertices.dimension - 1) continue;
    if (std::find(seen.begin(), seen.end(), bits) != seen.end()) continue;
    seen.push_back(bits);
    out.push_back(h);
  }
  return out;
}

bool is_integral(const VertexSet& vertices) { return !non_integral_witness(vertices).has_value(); }

std::optional<Point> non_integral_witness(const VertexSet& vertices) {
  for (const auto& v : vertices.vertices)
    for (const auto& x : v)
      if (!is_integer(x)) return v;
  return std::nullopt;
}

int polytope_dimension(const VertexSet& vertices) {
  std::vector<const Point*> pts;
  for (const auto& v : vertices.vertices) pts.push_back(&v);
  return std::max(affine_rank(pts), 0);
}

Rational volume_exact(const VertexSet& vertices, const std::vector<Halfspace>& facets,
                      const Limits& limits) {
  const int d = vertices.dimension;
  if (d > limits.max_vertex_dimension)
    fail(ErrorKind::LimitExceeded,
         "volume capped at d <= " + std::to_string(limits.max_vertex_dimension));
  if (vertices.vertices.empty() || polytope_dimension(vertices) != d)
    fail(ErrorKind::NotFullDimensional, "volume needs a full-dimensional polytope");
  std::vector<Bits> incidence;
  for (const auto& f : facets) incidence.push_back(tight_vertices(f, vertices));
  PullingTriangulation triangulation(vertices, std::move(incidence));
  Rational vol = triangulation.total_determinant() / Rational(factorial(d));
  vol.canonicalize();
  return vol;
}

std::int64_t lattice_points(const HalfspaceSystem& system, int dilation, const Limits& limits) {
  return lattice_points(system, enumerate_vertices(system, limits), dilation, limits);
}

std::int64_t lattice_points(const HalfspaceSystem& system, const VertexSet& vertices, int dilation,
                            const Limits& limits) {
  if (dilation < 1) fail(ErrorKind::InvalidArgument, "dilation must be positive");
  const int d = system.dimension;
  std::vector<std::int64_t> lo(d), hi(d);
  double work = 1;
  for (int k = 0; k < d; ++k) {
    Rational mn = vertices.vertices.front()[k], mx = mn;
    for (const auto& v : vertices.vertices) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    Integer a, b;
    Rational tmn = mn * dilation, tmx = mx * dilation;
    mpz_cdiv_q(a.get_mpz_t(), tmn.get_num_mpz_t(), tmn.get_den_mpz_t());
    mpz_fdiv_q(b.get_mpz_t(), tmx.get_num_mpz_t(), tmx.get_den_mpz_t());
    lo[k] = a.get_si();
    hi[k] = b.get_si();
    work *= static_cast<double>(hi[k] - lo[k] + 1);
  }
  if (work > static_cast<double>(limits.max_lattice_scan))
    fail(ErrorKind::LimitExceeded, "lattice scan exceeds " + std::to_string(limits.max_lattice_scan) +
                                       " points");

  // Integer rows a . z <= t * b, scaled by the common denominator.
  struct Row {
    std::vector<std::int64_t> a;
    std::int64_t b;
  };
  std::vector<Row> rows;
  for (const auto& h : system.halfspaces) {
    Integer scale = h.bound.get_den();
    for (const auto& a : h.coefficients) scale = lcm(scale, Integer(a.get_den()));
    Row row;
    for (const auto& a : h.coefficients) {
      Integer v = a.get_num() * (scale / a.get_den());
      if (!v.fits_slong_p()) fail(ErrorKind::LimitExceeded, "coefficient too large for lattice scan");
      row.a.push_back(v.get_si());
    }
    Integer b = h.bound.get_num() * (scale / h.bound.get_den()) * dilation;
    if (!b.fits_slong_p()) fail(ErrorKind::LimitExceeded, "bound too large for lattice scan");
    row.b = b.get_si();
    rows.push_back(std::move(row));
  }

  std::int64_t count = 0;
  std::vector<std::int64_t> z = lo;
  while (true) {
    bool inside = true;
    for (const auto& row : rows) {
      std::int64_t s = 0;
      for (int k = 0; k < d; ++k) s += row.a[k] * z[k];
      if (s > row.b) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    int k = d - 1;
    for (; k >= 0; --k) {
      if (z[k] < hi[k]) {
        ++z[k];
        break;
      }
      z[k] = lo[k];
    }
    if (k < 0) break;
  }
  return count;
}

Polytope Polytope::build(const HalfspaceSystem& system, const Limits& limits) {
  Polytope p;
  p.system = system;
  p.vertices = enumerate_vertices(system, limits);
  p.facets = facet_halfspaces(system, p.vertices);
  return p;
}

}  // namespace ocpoly
