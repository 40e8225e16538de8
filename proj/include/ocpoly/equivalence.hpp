#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocpoly/edge_partition.hpp"
#include "ocpoly/geometry.hpp"
#include "ocpoly/limits.hpp"
#include "ocpoly/poset.hpp"
#include "ocpoly/rational.hpp"

namespace ocpoly {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// x -> U x + w with U integral and |det U| = 1.
class AffineUnimodularMap {
 public:
  // Throws DimensionMismatch for ragged input, NotUnimodular otherwise.
  static AffineUnimodularMap make(IntegerMatrix matrix, std::vector<Integer> shift);
  static AffineUnimodularMap identity(int d);
  // x_i -> 1 - x_i for every i in `coordinates`, identity elsewhere.
  static AffineUnimodularMap reflection(int d, const ElementSet& coordinates);

  int dimension() const { return static_cast<int>(shift_.size()); }
  const IntegerMatrix& matrix() const { return matrix_; }
  const std::vector<Integer>& shift() const { return shift_; }
  Integer determinant() const;

  Point apply(const Point& x) const;
  AffineUnimodularMap inverse() const;
  // (this o other)(x) = this(other(x))
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const;

  friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

 private:
  IntegerMatrix matrix_;
  std::vector<Integer> shift_;
};

VertexSet apply_map(const AffineUnimodularMap& map, const VertexSet& vertices);
// The halfspace system of the image polytope.
HalfspaceSystem transform_system(const AffineUnimodularMap& map, const HalfspaceSystem& system);
// True when `map` sends `source` onto `target` bijectively.
bool maps_onto(const AffineUnimodularMap& map, const VertexSet& source, const VertexSet& target);

// True when every cover is (i, i+1), so each component is a chain on an
// interval of labels.
bool is_chain_union(const Poset& p);

// x'_i = x_i for i maximal in P'_l, x'_i = x_i - x_{i+1} otherwise.
AffineUnimodularMap phi_chain(const EdgePartition& partition);
// The three-case map for a zigzag base: x'_i = 1 - x_i when i is covered by
// both neighbours in P'_l, x_i - x_j when covered by exactly one j, x_i
// otherwise.
AffineUnimodularMap phi_zigzag(const EdgePartition& partition);

// Given the vertex set of a chain polytope whose poset only relates
// consecutive labels, returns that poset (first cover of every component
// ascending). Returns nullopt when the set is not of that form.
std::optional<Poset> consecutive_chain_target(const VertexSet& vertices);

// Applies `map` to OC_l(P) and checks the image is C(Q) for a poset Q with
// consecutive covers; returns Q.
std::optional<Poset> chain_polytope_image(const AffineUnimodularMap& map, const EdgePartition& partition,
                                          const Limits& limits = {});

struct Fingerprint {
  int dimension = 0;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  Rational volume;
  std::vector<std::int64_t> lattice_counts;  // dilations 1, 2, ...
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const HalfspaceSystem& system, int dilations = 3, const Limits& limits = {});
Fingerprint fingerprint(const Polytope& polytope, int dilations = 3, const Limits& limits = {});
// Name of the first differing field ("dimension", "vertex_count",
// "facet_count", "volume", "lattice_count_t2", ...), nullopt when equal.
std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b);

// Some five elements induce 1, 2 < 3 < 4, 5 with no further relations.
bool contains_forbidden_X(const Poset& p);

enum class Verdict { Equivalent, Distinct, Unknown };
std::string verdict_name(Verdict v);

struct EquivalenceCertificate {
  Verdict verdict = Verdict::Unknown;
  // Differing fingerprint field, "exhaustive-search", "search-budget" or
  // "affine-map".
  std::string reason;
  std::optional<AffineUnimodularMap> map;
  std::int64_t candidates_tried = 0;
};

// Decides affine unimodular equivalence of two full-dimensional integral
// polytopes: fingerprints first, then a search over images of a vertex and
// d of its edge neighbours.
EquivalenceCertificate equivalent_exhaustive(const HalfspaceSystem& first, const HalfspaceSystem& second,
                                             const Limits& limits = {});

// Facet-count upper bounds for O(P) and C(P), P on [d]; 2d for d <= 4.
int order_facet_bound(int d);
std::int64_t chain_facet_bound(int d);

// Documented extremal posets: complete bipartite with the lower block of
// size ceil(d/2) for O(P), levels from the optimal composition for C(P).
Poset order_bound_extremal(int d);
Poset chain_bound_extremal(int d);

struct FacetBoundReport {
  int d = 0;
  int order_bound = 0;
  std::int64_t chain_bound = 0;
  std::size_t posets_checked = 0;
  std::size_t max_order_facets = 0;
  std::size_t max_chain_facets = 0;
  bool order_bound_holds = true;
  bool chain_bound_holds = true;
  bool formulas_match_geometry = true;
  std::vector<Poset> order_extremals;  // iso-class representatives at equality
  std::vector<Poset> chain_extremals;
  bool documented_order_extremal_tight = false;
  bool documented_chain_extremal_tight = false;
};

// Sweeps every isomorphism class on [d] (d <= limits.max_iso_elements).
// Facet counts come from the closed formulas, cross-checked by geometry
// when `geometric` is set.
FacetBoundReport verify_facet_bounds(int d, bool geometric = true, const Limits& limits = {});

}  // namespace ocpoly
