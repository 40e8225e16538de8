#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "ocpoly/descent.hpp"
#include "ocpoly/equivalence.hpp"
#include "ocpoly/error.hpp"
#include "ocpoly/linalg.hpp"

namespace ocpoly {
namespace {

using Bits = boost::dynamic_bitset<>;

// Facet incidences and the edge graph of a polytope.
struct Skeleton {
  std::vector<Bits> incidence;              // per vertex, over facets
  std::vector<std::vector<std::size_t>> neighbours;

  explicit Skeleton(const Polytope& p) {
    const std::size_t nv = p.vertices.size();
    incidence.assign(nv, Bits(p.facets.size()));
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t f = 0; f < p.facets.size(); ++f)
        if (evaluate(p.facets[f], p.vertices.vertices[v]) == 0) incidence[v].set(f);
    neighbours.assign(nv, {});
    for (std::size_t u = 0; u < nv; ++u)
      for (std::size_t v = u + 1; v < nv; ++v) {
        // u, v span an edge iff the smallest face containing both has no
        // other vertex
        Bits common = incidence[u] & incidence[v];
        bool edge = true;
        for (std::size_t w = 0; w < nv && edge; ++w)
          if (w != u && w != v && common.is_subset_of(incidence[w])) edge = false;
        if (edge) {
          neighbours[u].push_back(v);
          neighbours[v].push_back(u);
        }
      }
  }

  std::pair<std::size_t, std::size_t> signature(std::size_t v) const {
    return {incidence[v].count(), neighbours[v].size()};
  }
};

class BaseImageSearch {
 public:
  BaseImageSearch(const Polytope& a, const Polytope& b, std::int64_t budget)
      : a_(a), b_(b), sa_(a), sb_(b), budget_(budget), d_(a.system.dimension) {}

  EquivalenceCertificate run() {
    EquivalenceCertificate cert;
    choose_base();
    for (std::size_t w0 = 0; w0 < b_.vertices.size(); ++w0) {
      if (sb_.signature(w0) != sa_.signature(v0_)) continue;
      image_.assign(1, w0);
      if (extend(cert)) return cert;
      if (exhausted_) break;
    }
    cert.candidates_tried = tried_;
    if (exhausted_) {
      cert.verdict = Verdict::Unknown;
      cert.reason = "search-budget";
    } else {
      cert.verdict = Verdict::Distinct;
      cert.reason = "exhaustive-search";
    }
    return cert;
  }

 private:
  // v0 with the fewest candidate images, then d neighbours whose edge
  // directions are independent.
  void choose_base() {
    auto falling = [&](std::size_t deg) {
      double r = 1;
      for (int k = 0; k < d_; ++k) r *= static_cast<double>(deg > static_cast<std::size_t>(k) ? deg - k : 0);
      return r;
    };
    double best = -1;
    for (std::size_t v = 0; v < a_.vertices.size(); ++v) {
      std::size_t matches = 0;
      for (std::size_t w = 0; w < b_.vertices.size(); ++w)
        if (sb_.signature(w) == sa_.signature(v)) ++matches;
      double cost = static_cast<double>(matches) * falling(sa_.neighbours[v].size());
      if (best < 0 || cost < best) {
        best = cost;
        v0_ = v;
      }
    }
    const Point& origin = a_.vertices.vertices[v0_];
    Matrix rows;
    for (std::size_t u : sa_.neighbours[v0_]) {
      Point dir = a_.vertices.vertices[u];
      for (int k = 0; k < d_; ++k) dir[k] -= origin[k];
      rows.push_back(dir);
      if (rank(rows) == static_cast<int>(rows.size())) {
        base_.push_back(u);
        if (static_cast<int>(base_.size()) == d_) break;
      } else {
        rows.pop_back();
      }
    }
    if (static_cast<int>(base_.size()) != d_)
      fail(ErrorKind::NotFullDimensional, "edge directions at a vertex do not span R^d");
    // columns of B are the base directions; keep B^{-1}
    Matrix b(d_, std::vector<Rational>(d_));
    for (int r = 0; r < d_; ++r)
      for (int c = 0; c < d_; ++c) b[r][c] = rows[c][r];
    b_inverse_ = *inverse(b);
  }

  bool extend(EquivalenceCertificate& cert) {
    const std::size_t k = image_.size() - 1;
    if (static_cast<int>(k) == d_) return check(cert);
    const std::size_t u = base_[k];
    for (std::size_t w : sb_.neighbours[image_[0]]) {
      if (sb_.signature(w) != sa_.signature(u)) continue;
      if (std::find(image_.begin() + 1, image_.end(), w) != image_.end()) continue;
      image_.push_back(w);
      bool found = extend(cert);
      image_.pop_back();
      if (found || exhausted_) return found;
    }
    return false;
  }

  bool check(EquivalenceCertificate& cert) {
    if (++tried_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Point& w0 = b_.vertices.vertices[image_[0]];
    const Point& v0 = a_.vertices.vertices[v0_];
    // U = W B^{-1}
    IntegerMatrix u(d_, std::vector<Integer>(d_));
    for (int r = 0; r < d_; ++r)
      for (int c = 0; c < d_; ++c) {
        Rational s = 0;
        for (int k = 0; k < d_; ++k) {
          const Rational diff = b_.vertices.vertices[image_[k + 1]][r] - w0[r];
          if (diff != 0) s += diff * b_inverse_[k][c];
        }
        if (!is_integer(s)) return false;
        u[r][c] = s.get_num();
      }
    std::vector<Integer> shift(d_);
    for (int r = 0; r < d_; ++r) {
      Rational s = w0[r];
      for (int c = 0; c < d_; ++c) s -= u[r][c] * v0[c];
      if (!is_integer(s)) return false;
      shift[r] = s.get_num();
    }
    Rational det = determinant(Matrix([&] {
      Matrix m(d_);
      for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c) m[r].emplace_back(u[r][c]);
      return m;
    }()));
    if (abs(det) != 1) return false;
    auto map = AffineUnimodularMap::make(std::move(u), std::move(shift));
    for (const auto& v : a_.vertices.vertices)
      if (!b_.vertices.contains(map.apply(v))) return false;
    cert.verdict = Verdict::Equivalent;
    cert.reason = "affine-map";
    cert.map = std::move(map);
    cert.candidates_tried = tried_;
    return true;
  }

  const Polytope& a_;
  const Polytope& b_;
  Skeleton sa_, sb_;
  std::int64_t budget_;
  int d_;
  std::size_t v0_ = 0;
  std::vector<std::size_t> base_;
  Matrix b_inverse_;
  std::vector<std::size_t> image_;
  std::int64_t tried_ = 0;
  bool exhausted_ = false;
};

std::size_t order_facets(const Poset& p) {
  auto s = poset_stats(p);
  return static_cast<std::size_t>(s.min_count + s.max_count + s.edge_count);
}

std::size_t chain_facets(const Poset& p) { return p.size() + poset_stats(p).chain_count; }

}  // namespace

EquivalenceCertificate equivalent_exhaustive(const HalfspaceSystem& first, const HalfspaceSystem& second,
                                             const Limits& limits) {
  if (first.dimension != second.dimension) {
    EquivalenceCertificate cert;
    cert.verdict = Verdict::Distinct;
    cert.reason = "dimension";
    return cert;
  }
  const auto a = Polytope::build(first, limits);
  const auto b = Polytope::build(second, limits);
  if (polytope_dimension(a.vertices) != first.dimension || polytope_dimension(b.vertices) != second.dimension)
    fail(ErrorKind::NotFullDimensional, "equivalence search needs full-dimensional polytopes");
  auto diff = first_difference(fingerprint(a, 3, limits), fingerprint(b, 3, limits));
  if (diff) {
    EquivalenceCertificate cert;
    cert.verdict = Verdict::Distinct;
    cert.reason = *diff;
    return cert;
  }
  return BaseImageSearch(a, b, limits.equivalence_budget).run();
}

int order_facet_bound(int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  if (d <= 4) return 2 * d;
  const int h = (d + 1) / 2;
  return h * (d - h) + d;
}

std::int64_t chain_facet_bound(int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  if (d <= 4) return 2 * d;
  return max_product_closed_form(d) + d;
}

Poset order_bound_extremal(int d) {
  if (d <= 4) return antichain_poset(d);
  return complete_bipartite_poset((d + 1) / 2, d / 2);
}

Poset chain_bound_extremal(int d) {
  if (d <= 4) return antichain_poset(d);
  return leveled_poset(max_product_composition(d).parts);
}

FacetBoundReport verify_facet_bounds(int d, bool geometric, const Limits& limits) {
  FacetBoundReport r;
  r.d = d;
  r.order_bound = order_facet_bound(d);
  r.chain_bound = chain_facet_bound(d);
  for (const auto& p : enumerate_posets_up_to_iso(d, limits)) {
    std::size_t fo = order_facets(p), fc = chain_facets(p);
    if (geometric) {
      const auto o = Polytope::build(hrep_order(p), limits);
      const auto c = Polytope::build(hrep_chain(p), limits);
      if (o.facets.size() != fo || c.facets.size() != fc) r.formulas_match_geometry = false;
    }
    ++r.posets_checked;
    r.max_order_facets = std::max(r.max_order_facets, fo);
    r.max_chain_facets = std::max(r.max_chain_facets, fc);
    if (fo > static_cast<std::size_t>(r.order_bound)) r.order_bound_holds = false;
    if (fc > static_cast<std::size_t>(r.chain_bound)) r.chain_bound_holds = false;
    if (fo == static_cast<std::size_t>(r.order_bound)) r.order_extremals.push_back(p);
    if (fc == static_cast<std::size_t>(r.chain_bound)) r.chain_extremals.push_back(p);
  }
  r.documented_order_extremal_tight =
      order_facets(order_bound_extremal(d)) == static_cast<std::size_t>(r.order_bound);
  r.documented_chain_extremal_tight =
      chain_facets(chain_bound_extremal(d)) == static_cast<std::size_t>(r.chain_bound);
  return r;
}

}  // namespace ocpoly
