#include "ocpoly/equivalence.hpp"

#include <algorithm>

#include "ocpoly/error.hpp"
#include "ocpoly/linalg.hpp"

namespace ocpoly {
namespace {

Matrix to_rational(const IntegerMatrix& m) {
  Matrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (const auto& x : m[r]) out[r].emplace_back(x);
  return out;
}

IntegerMatrix identity_matrix(int d) {
  IntegerMatrix m(d, std::vector<Integer>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

AffineUnimodularMap AffineUnimodularMap::make(IntegerMatrix matrix, std::vector<Integer> shift) {
  const std::size_t d = shift.size();
  if (matrix.size() != d)
    fail(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(matrix.size()) + " rows, shift has " +
                                           std::to_string(d) + " entries");
  for (const auto& row : matrix)
    if (row.size() != d) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  AffineUnimodularMap m;
  m.matrix_ = std::move(matrix);
  m.shift_ = std::move(shift);
  Integer det = m.determinant();
  if (abs(det) != 1) fail(ErrorKind::NotUnimodular, "determinant is " + to_string(det));
  return m;
}

AffineUnimodularMap AffineUnimodularMap::identity(int d) {
  return make(identity_matrix(d), std::vector<Integer>(d, 0));
}

AffineUnimodularMap AffineUnimodularMap::reflection(int d, const ElementSet& coordinates) {
  IntegerMatrix m = identity_matrix(d);
  std::vector<Integer> w(d, 0);
  for (int i : coordinates) {
    if (i < 1 || i > d) fail(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(i) + " not in [d]");
    m[i - 1][i - 1] = -1;
    w[i - 1] = 1;
  }
  return make(std::move(m), std::move(w));
}

Integer AffineUnimodularMap::determinant() const {
  if (shift_.empty()) return 1;
  Rational det = ocpoly::determinant(to_rational(matrix_));
  return det.get_num();
}

Point AffineUnimodularMap::apply(const Point& x) const {
  const int d = dimension();
  if (static_cast<int>(x.size()) != d)
    fail(ErrorKind::DimensionMismatch, "point of length " + std::to_string(x.size()) + " for map on R^" +
                                           std::to_string(d));
  Point y(d);
  for (int r = 0; r < d; ++r) {
    Rational s = shift_[r];
    for (int c = 0; c < d; ++c)
      if (matrix_[r][c] != 0) s += matrix_[r][c] * x[c];
    y[r] = s;
  }
  return y;
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  const int d = dimension();
  auto inv = ocpoly::inverse(to_rational(matrix_));
  IntegerMatrix m(d, std::vector<Integer>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = (*inv)[r][c].get_num();
  std::vector<Integer> w(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) w[r] -= m[r][c] * shift_[c];
  return make(std::move(m), std::move(w));
}

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& other) const {
  const int d = dimension();
  if (other.dimension() != d) fail(ErrorKind::DimensionMismatch, "composing maps of different dimension");
  IntegerMatrix m(d, std::vector<Integer>(d, 0));
  std::vector<Integer> w = shift_;
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      if (matrix_[r][k] == 0) continue;
      for (int c = 0; c < d; ++c) m[r][c] += matrix_[r][k] * other.matrix_[k][c];
      w[r] += matrix_[r][k] * other.shift_[k];
    }
  return make(std::move(m), std::move(w));
}

VertexSet apply_map(const AffineUnimodularMap& map, const VertexSet& vertices) {
  if (vertices.dimension != map.dimension())
    fail(ErrorKind::DimensionMismatch, "vertex set in R^" + std::to_string(vertices.dimension) +
                                           ", map on R^" + std::to_string(map.dimension()));
  std::vector<Point> image;
  image.reserve(vertices.size());
  for (const auto& v : vertices.vertices) image.push_back(map.apply(v));
  return VertexSet::make(vertices.dimension, std::move(image));
}

HalfspaceSystem transform_system(const AffineUnimodularMap& map, const HalfspaceSystem& system) {
  if (system.dimension != map.dimension())
    fail(ErrorKind::DimensionMismatch, "system in R^" + std::to_string(system.dimension) + ", map on R^" +
                                           std::to_string(map.dimension()));
  // a.x <= b with x = U^{-1}(y - w): (a U^{-1}) y <= b + (a U^{-1}) w
  const auto inv = map.inverse();
  const int d = system.dimension;
  HalfspaceSystem out{d, {}};
  for (const auto& h : system.halfspaces) {
    Halfspace g;
    g.tag = h.tag;
    g.coefficients.assign(d, 0);
    for (int c = 0; c < d; ++c)
      for (int k = 0; k < d; ++k)
        if (inv.matrix()[k][c] != 0) g.coefficients[c] += h.coefficients[k] * inv.matrix()[k][c];
    g.bound = h.bound;
    for (int c = 0; c < d; ++c) g.bound += g.coefficients[c] * map.shift()[c];
    out.halfspaces.push_back(std::move(g));
  }
  return out;
}

bool maps_onto(const AffineUnimodularMap& map, const VertexSet& source, const VertexSet& target) {
  if (source.dimension != map.dimension() || target.dimension != map.dimension()) return false;
  if (source.size() != target.size()) return false;
  return apply_map(map, source) == target;
}

bool is_chain_union(const Poset& p) {
  return std::all_of(p.covers().begin(), p.covers().end(),
                     [](const Cover& c) { return c.upper == c.lower + 1; });
}

AffineUnimodularMap phi_chain(const EdgePartition& partition) {
  const Poset& p = partition.base();
  if (!is_chain_union(p)) fail(ErrorKind::NotChainUnion, "covers must all have the form (i, i+1)");
  const int d = p.size();
  IntegerMatrix m = identity_matrix(d);
  for (const auto& c : partition.order_edges()) m[c.lower - 1][c.upper - 1] = -1;
  return AffineUnimodularMap::make(std::move(m), std::vector<Integer>(d, 0));
}

AffineUnimodularMap phi_zigzag(const EdgePartition& partition) {
  const Poset& p = partition.base();
  if (!is_zigzag(p)) fail(ErrorKind::NotZigzag, "base poset is not a zigzag");
  const int d = p.size();
  std::vector<std::vector<int>> covered_by(d + 1);
  for (const auto& c : partition.order_edges()) covered_by[c.lower].push_back(c.upper);
  IntegerMatrix m = identity_matrix(d);
  std::vector<Integer> w(d, 0);
  for (int i = 1; i <= d; ++i) {
    const auto& up = covered_by[i];
    if (up.size() == 2) {
      m[i - 1][i - 1] = -1;
      w[i - 1] = 1;
    } else if (up.size() == 1) {
      m[i - 1][up[0] - 1] = -1;
    }
  }
  return AffineUnimodularMap::make(std::move(m), std::move(w));
}

std::optional<Poset> consecutive_chain_target(const VertexSet& vertices) {
  const int d = vertices.dimension;
  for (const auto& v : vertices.vertices)
    for (const auto& x : v)
      if (x != 0 && x != 1) return std::nullopt;
  // i, j comparable in Q iff no antichain indicator contains both
  auto comparable = [&](int i, int j) {
    for (const auto& v : vertices.vertices)
      if (v[i - 1] == 1 && v[j - 1] == 1) return false;
    return true;
  };
  std::vector<Cover> covers;
  bool ascending = true;
  for (int i = 1; i < d; ++i) {
    if (!comparable(i, i + 1)) continue;
    const bool continues = i > 1 && comparable(i - 1, i);
    if (!continues)
      ascending = true;
    else if (!comparable(i - 1, i + 1))
      ascending = !ascending;
    covers.push_back(ascending ? Cover{i, i + 1} : Cover{i + 1, i});
  }
  Poset q = new_poset(d, covers);
  if (enumerate_vertices(hrep_chain(q)) != vertices) return std::nullopt;
  return q;
}

std::optional<Poset> chain_polytope_image(const AffineUnimodularMap& map, const EdgePartition& partition,
                                          const Limits& limits) {
  auto source = enumerate_vertices(hrep_order_chain(partition), limits);
  return consecutive_chain_target(apply_map(map, source));
}

Fingerprint fingerprint(const Polytope& polytope, int dilations, const Limits& limits) {
  Fingerprint f;
  f.dimension = polytope_dimension(polytope.vertices);
  f.vertex_count = polytope.vertices.size();
  f.facet_count = polytope.facets.size();
  f.volume = polytope.volume(limits);
  for (int t = 1; t <= dilations; ++t)
    f.lattice_counts.push_back(lattice_points(polytope.system, polytope.vertices, t, limits));
  return f;
}

Fingerprint fingerprint(const HalfspaceSystem& system, int dilations, const Limits& limits) {
  return fingerprint(Polytope::build(system, limits), dilations, limits);
}

std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.dimension != b.dimension) return "dimension";
  if (a.vertex_count != b.vertex_count) return "vertex_count";
  if (a.facet_count != b.facet_count) return "facet_count";
  if (a.volume != b.volume) return "volume";
  const std::size_t n = std::min(a.lattice_counts.size(), b.lattice_counts.size());
  for (std::size_t t = 0; t < n; ++t)
    if (a.lattice_counts[t] != b.lattice_counts[t]) return "lattice_count_t" + std::to_string(t + 1);
  if (a.lattice_counts.size() != b.lattice_counts.size()) return "lattice_counts";
  return std::nullopt;
}

bool contains_forbidden_X(const Poset& p) {
  const int d = p.size();
  auto has_incomparable_pair = [&](std::uint64_t mask) {
    for (int i = 1; i <= d; ++i) {
      if (!(mask >> (i - 1) & 1U)) continue;
      for (int j = i + 1; j <= d; ++j)
        if ((mask >> (j - 1) & 1U) && !p.comparable(i, j)) return true;
    }
    return false;
  };
  for (int m = 1; m <= d; ++m)
    if (has_incomparable_pair(p.strictly_below(m)) && has_incomparable_pair(p.strictly_above(m))) return true;
  return false;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Distinct: return "distinct";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace ocpoly
