#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocpoly/edge_partition.hpp"
#include "ocpoly/limits.hpp"
#include "ocpoly/poset.hpp"
#include "ocpoly/rational.hpp"

namespace ocpoly {

enum class HalfspaceKind { BoxLower, BoxUpper, OrderEdge, Chain, Other };

// Which inequality family produced a halfspace: box bounds carry one
// element, order edges (lower, upper), chains their elements bottom-up.
struct HalfspaceTag {
  HalfspaceKind kind = HalfspaceKind::Other;
  std::vector<int> elements;
  friend bool operator==(const HalfspaceTag&, const HalfspaceTag&) = default;
};

// a . x <= b
struct Halfspace {
  std::vector<Rational> coefficients;
  Rational bound;
  HalfspaceTag tag;
};

struct HalfspaceSystem {
  int dimension = 0;
  std::vector<Halfspace> halfspaces;
};

// Canonically sorted (lexicographic), duplicate free.
struct VertexSet {
  int dimension = 0;
  std::vector<Point> vertices;

  static VertexSet make(int dimension, std::vector<Point> points);
  bool contains(const Point& p) const;
  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// a . v - b: zero on the hyperplane, negative strictly inside.
Rational evaluate(const Halfspace& h, const Point& v);

HalfspaceSystem hrep_order(const Poset& p);
HalfspaceSystem hrep_chain(const Poset& p);
HalfspaceSystem hrep_order_chain(const EdgePartition& partition);

// Double description over the homogenized cone with exact integer rays.
VertexSet enumerate_vertices(const HalfspaceSystem& system, const Limits& limits = {});

// Irredundant facet-defining sublist, first occurrence kept per facet.
std::vector<Halfspace> facet_halfspaces(const HalfspaceSystem& system, const VertexSet& vertices);

bool is_integral(const VertexSet& vertices);
std::optional<Point> non_integral_witness(const VertexSet& vertices);

int polytope_dimension(const VertexSet& vertices);

// Euclidean volume via a pulling triangulation: cone from the least vertex
// over every facet avoiding it, recursively.
Rational volume_exact(const VertexSet& vertices, const std::vector<Halfspace>& facets,
                      const Limits& limits = {});

// Integer points of t * P.
std::int64_t lattice_points(const HalfspaceSystem& system, int dilation, const Limits& limits = {});
// Same count with the vertex set already known (it bounds the scan box).
std::int64_t lattice_points(const HalfspaceSystem& system, const VertexSet& vertices, int dilation,
                            const Limits& limits = {});

Point indicator_vector(const ElementSet& subset, int d);

std::string format_halfspace(const Halfspace& h);
std::string tag_name(const HalfspaceTag& tag);

// Vertices, facets and volume of one system, computed once.
struct Polytope {
  HalfspaceSystem system;
  VertexSet vertices;
  std::vector<Halfspace> facets;

  static Polytope build(const HalfspaceSystem& system, const Limits& limits = {});
  Rational volume(const Limits& limits = {}) const { return volume_exact(vertices, facets, limits); }
};

}  // namespace ocpoly
