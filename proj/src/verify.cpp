#include "ocpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ocpoly/descent.hpp"
#include "ocpoly/equivalence.hpp"
#include "ocpoly/error.hpp"
#include "ocpoly/fixtures.hpp"
#include "ocpoly/geometry.hpp"

namespace ocpoly {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string slug) { report_.slug = std::move(slug); }

  void check(std::string description, std::string claim, bool passed, std::string detail = {}) {
    report_.assertions.push_back(
        {report_.slug, std::move(description), std::move(claim), passed, std::move(detail)});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::vector<Poset> all_zigzags(int n) {
  std::vector<Poset> out;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    ElementSet s;
    for (int j = 1; j < n; ++j)
      if (mask >> (j - 1) & 1U) s.push_back(j);
    out.push_back(zigzag_from_descent_set(DescentSet::make(n, s)));
  }
  return out;
}

std::vector<Poset> all_chain_unions(int d) {
  std::vector<Poset> out;
  for (std::uint32_t cuts = 0; cuts < (1U << (d - 1)); ++cuts) {
    std::vector<Cover> covers;
    for (int i = 1; i < d; ++i)
      if (!(cuts >> (i - 1) & 1U)) covers.push_back({i, i + 1});
    out.push_back(new_poset(d, covers));
  }
  return out;
}

bool integral_oc(const EdgePartition& l, const Limits& limits) {
  return is_integral(enumerate_vertices(hrep_order_chain(l), limits));
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string count_detail(std::size_t checked, std::size_t exceptions, const char* unit) {
  return std::to_string(checked) + " " + unit + ", " + std::to_string(exceptions) + " exceptions";
}

SuiteReport integrality_acyclic(const Limits& limits) {
  Recorder r("integrality-acyclic");
  const Point half(4, make_rational(1, 2));
  auto l1 = fixtures::diamond_half_partition();
  auto l2 = fixtures::diamond_integral_partition();
  auto v1 = enumerate_vertices(hrep_order_chain(l1), limits);
  r.check("4-cycle with oE = {12, 24, 34} has the vertex (1/2, 1/2, 1/2, 1/2)",
          "the partition with a single chain edge {1,3} of the 4-cycle is not integral",
          v1.contains(half) && !is_integral(v1), std::to_string(v1.size()) + " vertices");
  r.check("4-cycle with oE = {13} is integral", "the complementary partition of the 4-cycle is integral",
          integral_oc(l2, limits));
  r.check("the two 4-cycle partitions are complements of each other",
          "complementing an integral partition need not give an integral one", l1.complement() == l2);

  std::size_t bad = 0, total = 0;
  const Rational halfq = make_rational(1, 2);
  for (const auto& l : enumerate_partitions(fixtures::diamond_poset(), limits)) {
    ++total;
    for (const auto& v : enumerate_vertices(hrep_order_chain(l), limits).vertices)
      for (const auto& x : v)
        if (x != 0 && x != 1 && x != halfq) ++bad;
  }
  r.check("every vertex coordinate over all 4-cycle partitions lies in {0, 1/2, 1}",
          "vertex coordinates of the 4-cycle order-chain polytopes are 0, 1 or 1/2", bad == 0 && total == 16,
          std::to_string(total) + " partitions, " + std::to_string(bad) + " other coordinates");

  std::size_t classes = 0;
  for (int d = 1; d <= 5; ++d) {
    std::size_t posets = 0, partitions = 0, exceptions = 0;
    for (const auto& p : enumerate_posets_up_to_iso(d, limits)) {
      ++posets;
      bool all_integral = true;
      for_each_partition(p, [&](const EdgePartition& l) {
        ++partitions;
        if (!integral_oc(l, limits)) all_integral = false;
      }, limits);
      if (all_integral != is_hasse_forest(p)) ++exceptions;
    }
    classes += posets;
    r.check("d = " + std::to_string(d) + ": every partition integral iff the Hasse diagram is a forest",
            "all edge partitions of P are integral if and only if P is acyclic", exceptions == 0,
            std::to_string(posets) + " posets, " + std::to_string(partitions) + " partitions, " +
                std::to_string(exceptions) + " exceptions");
  }
  r.check("87 isomorphism classes with d <= 5 were swept", "there are 1 + 2 + 5 + 16 + 63 posets up to isomorphism",
          classes == 87, std::to_string(classes) + " classes");
  return r.take();
}

SuiteReport minimal_partition(const Limits& limits) {
  Recorder r("minimal-partition");
  auto diamond = minimal_incident_partition(fixtures::diamond_poset(), {1});
  r.check("4-cycle, S = {1}: cE = {12, 13}", "cE is the set of edges incident to S",
          diamond.chain_edges() == std::vector<Cover>{{1, 2}, {1, 3}} && integral_oc(diamond, limits));
  auto fork = minimal_incident_partition(fixtures::fork_poset(), {1});
  r.check("fork poset, S = {1}: cE = {12, 13}, oE = {34}", "cE is the set of edges incident to S",
          fork.chain_edges() == std::vector<Cover>{{1, 2}, {1, 3}} &&
              fork.order_edges() == std::vector<Cover>{{3, 4}});
  bool rejected = false;
  try {
    minimal_incident_partition(fixtures::diamond_poset(), {2});
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotMinimal;
  }
  r.check("a non-minimal element is rejected", "S must consist of minimal elements", rejected);

  for (int d = 1; d <= 5; ++d) {
    std::size_t cases = 0, exceptions = 0;
    for (const auto& p : enumerate_posets_up_to_iso(d, limits)) {
      auto mins = minimal_elements(p);
      for (std::uint32_t mask = 0; mask < (1U << mins.size()); ++mask) {
        ElementSet s;
        for (std::size_t k = 0; k < mins.size(); ++k)
          if (mask >> k & 1U) s.push_back(mins[k]);
        ++cases;
        if (!integral_oc(minimal_incident_partition(p, s), limits)) ++exceptions;
      }
    }
    r.check("d = " + std::to_string(d) + ": every (E minus E_S, E_S) is integral",
            "making the edges at a set of minimal elements chain edges gives an integral polytope",
            exceptions == 0, count_detail(cases, exceptions, "pairs (P, S)"));
  }
  return r.take();
}

SuiteReport chain_equiv(const Limits& limits) {
  Recorder r("chain-equiv");
  auto chain3 = chain_poset(3);
  auto phi = phi_chain(make_partition(chain3, chain3.covers()));
  r.check("chain on [3], all order edges: x' = (x1 - x2, x2 - x3, x3) maps O onto C",
          "the difference map sends the order polytope of a chain onto its chain polytope",
          apply_map(phi, enumerate_vertices(hrep_order(chain3), limits)) ==
              enumerate_vertices(hrep_chain(chain3), limits));

  auto seven = fixtures::seven_chain_partition();
  auto target = chain_polytope_image(phi_chain(seven), seven, limits);
  r.check("7-chain with oE = {12, 45, 56}: image is C(Q) with maximal chains {1,2}, {2..6}, {6,7}",
          "OC of a chain is unimodularly equivalent to the chain polytope of a zigzag",
          target && is_zigzag(*target) &&
              maximal_chains(*target) == std::vector<Chain>{{1, 2}, {6, 5, 4, 3, 2}, {6, 7}},
          target ? describe(*target) : "no chain polytope image");

  for (int n = 1; n <= 7; ++n) {
    std::size_t checked = 0, exceptions = 0;
    for_each_partition(chain_poset(n), [&](const EdgePartition& l) {
      ++checked;
      auto m = phi_chain(l);
      auto q = chain_polytope_image(m, l, limits);
      if (abs(m.determinant()) != 1 || !q || !is_zigzag(*q) || *q != chain_partition_zigzag(l)) ++exceptions;
    }, limits);
    r.check("n = " + std::to_string(n) + ": every partition of the chain maps onto C(zigzag)",
            "OC of a chain is unimodularly equivalent to the chain polytope of a zigzag", exceptions == 0,
            count_detail(checked, exceptions, "partitions"));
  }

  std::size_t checked = 0, exceptions = 0;
  for (int d = 2; d <= 6; ++d)
    for (const auto& p : all_chain_unions(d))
      for_each_partition(p, [&](const EdgePartition& l) {
        ++checked;
        auto m = phi_chain(l);
        if (abs(m.determinant()) != 1 || !chain_polytope_image(m, l, limits)) ++exceptions;
      }, limits);
  r.check("disjoint unions of chains, d <= 6: every partition maps onto a chain polytope",
          "OC of a disjoint union of chains is a product of chain polytopes of zigzags", exceptions == 0,
          count_detail(checked, exceptions, "partitions"));
  return r.take();
}

SuiteReport zigzag_equiv(const Limits& limits) {
  Recorder r("zigzag-equiv");
  bool same = true;
  for (int n = 1; n <= 7; ++n)
    for_each_partition(chain_poset(n), [&](const EdgePartition& l) { same = same && phi_zigzag(l) == phi_chain(l); },
                       limits);
  r.check("on chains the zigzag map equals the chain map", "a chain is a zigzag without turning points", same);

  auto v = zigzag_from_descent_set(DescentSet::make(3, {1}));
  auto all = make_partition(v, v.covers());
  auto m = phi_zigzag(all);
  auto q = chain_polytope_image(m, all, limits);
  r.check("1 > 2 < 3 with all order edges: x'_2 = 1 - x_2 and the image is a chain polytope",
          "an element covered by both neighbours in P' is reflected", m == AffineUnimodularMap::reflection(3, {2}) && q,
          q ? describe(*q) : "no chain polytope image");

  for (int n = 1; n <= 7; ++n) {
    std::size_t checked = 0, exceptions = 0;
    for (const auto& z : all_zigzags(n))
      for_each_partition(z, [&](const EdgePartition& l) {
        ++checked;
        auto map = phi_zigzag(l);
        auto target = chain_polytope_image(map, l, limits);
        if (abs(map.determinant()) != 1 || !target || !is_zigzag(*target)) ++exceptions;
      }, limits);
    r.check("n = " + std::to_string(n) + ": every zigzag and partition maps onto C(zigzag)",
            "OC of a zigzag is unimodularly equivalent to the chain polytope of a zigzag", exceptions == 0,
            count_detail(checked, exceptions, "partitions"));
  }

  auto x = fixtures::x_partition();
  auto refl = AffineUnimodularMap::reflection(5, {2});
  r.check("X poset, oE = {13, 34, 35}: (x1, 1 - x2, x3, x4, x5) maps OC onto O(X)",
          "the reflection in the second coordinate carries OC onto the order polytope of X",
          apply_map(refl, enumerate_vertices(hrep_order_chain(x), limits)) ==
              enumerate_vertices(hrep_order(fixtures::x_poset()), limits));
  return r.take();
}

SuiteReport forbidden_x(const Limits& limits) {
  Recorder r("forbidden-x");
  bool zig = true;
  for (int n = 1; n <= 7; ++n)
    for (const auto& z : all_zigzags(n)) zig = zig && !contains_forbidden_X(z);
  r.check("no zigzag with n <= 7 contains X", "zigzags avoid the X pattern", zig);
  r.check("the X poset contains X", "X is its own pattern", contains_forbidden_X(fixtures::x_poset()));
  r.check("the 6-element new-type poset contains X", "{1,2,3,5,6} induces X",
          contains_forbidden_X(fixtures::new_type_poset(6)));

  auto ox = hrep_order(fixtures::x_poset());
  std::map<std::string, int> reasons;
  std::size_t equivalent = 0, checked = 0;
  for (const auto& q : enumerate_posets_up_to_iso(5, limits)) {
    ++checked;
    auto cert = equivalent_exhaustive(ox, hrep_chain(q), limits);
    if (cert.verdict != Verdict::Distinct) ++equivalent;
    ++reasons[cert.reason];
  }
  std::string tally;
  for (const auto& [reason, count] : reasons) tally += (tally.empty() ? "" : ", ") + reason + " " + std::to_string(count);
  r.check("O(X) is not unimodularly equivalent to C(Q) for any of the 63 posets Q on [5]",
          "the order polytope of X is not equivalent to any chain polytope", equivalent == 0 && checked == 63,
          std::to_string(checked) + " posets; " + tally);

  std::size_t small = 0, small_bad = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& p : enumerate_posets_up_to_iso(d, limits)) {
      ++small;
      if (equivalent_exhaustive(hrep_order(p), hrep_chain(p), limits).verdict != Verdict::Equivalent) ++small_bad;
    }
  r.check("d <= 4: O(P) and C(P) are unimodularly equivalent", "for d <= 4 order and chain polytopes agree",
          small_bad == 0, count_detail(small, small_bad, "posets"));

  std::size_t five = 0, mismatches = 0;
  for (const auto& p : enumerate_posets_up_to_iso(5, limits)) {
    ++five;
    auto cert = equivalent_exhaustive(hrep_order(p), hrep_chain(p), limits);
    if (cert.verdict == Verdict::Unknown || (cert.verdict == Verdict::Equivalent) == contains_forbidden_X(p))
      ++mismatches;
  }
  r.check("d = 5: O(P) and C(P) are equivalent exactly when X is not an induced subposet",
          "O(P) and C(P) are unimodularly equivalent iff X does not appear in P", mismatches == 0,
          count_detail(five, mismatches, "posets"));
  return r.take();
}

SuiteReport facet_bounds(const Limits& limits) {
  Recorder r("facet-bounds");
  for (int d = 1; d <= 6; ++d) {
    auto rep = verify_facet_bounds(d, true, limits);
    r.check("d = " + std::to_string(d) + ": both bounds hold, are attained, and the documented posets attain them",
            "f(O(P)) and f(C(P)) obey the facet bounds, which are tight",
            rep.formulas_match_geometry && rep.order_bound_holds && rep.chain_bound_holds &&
                rep.max_order_facets == static_cast<std::size_t>(rep.order_bound) &&
                rep.max_chain_facets == static_cast<std::size_t>(rep.chain_bound) &&
                rep.documented_order_extremal_tight && rep.documented_chain_extremal_tight,
            std::to_string(rep.posets_checked) + " posets, order max " + std::to_string(rep.max_order_facets) +
                " / bound " + std::to_string(rep.order_bound) + ", chain max " +
                std::to_string(rep.max_chain_facets) + " / bound " + std::to_string(rep.chain_bound));
  }
  auto k32 = Polytope::build(hrep_order(complete_bipartite_poset(3, 2)), limits);
  r.check("d = 5: the complete bipartite poset 3 x 2 has 11 order facets",
          "the order bound is attained by a complete bipartite poset", k32.facets.size() == 11 && order_facet_bound(5) == 11);
  r.check("d = 5: chain bound is 2 * 3 + 5 = 11", "chain bound 2 * 3^k + d for d = 3k + 2", chain_facet_bound(5) == 11);
  auto lev = Polytope::build(hrep_chain(chain_bound_extremal(6)), limits);
  r.check("d = 6: chain bound 3^2 + 6 = 15 is attained by two complete levels of three",
          "chain bound 3^k + d for d = 3k", chain_facet_bound(6) == 15 && lev.facets.size() == 15);

  bool m_ok = true;
  for (int d = 1; d <= 40; ++d) m_ok = m_ok && max_product_composition(d).product == max_product_closed_form(d);
  r.check("M(d) by exhaustive search equals the closed form for d <= 40",
          "M(d) = 3^k, 4 * 3^(k-1), 2 * 3^k by d mod 3", m_ok);

  bool agree = true;
  for (int d = 1; d <= 7; ++d) agree = agree && order_facet_bound(d) == chain_facet_bound(d);
  r.check("the two bounds coincide for d <= 7 and differ at d = 8 (24 vs 26)",
          "the bounds coincide for small d; the coincidence does not extend to d = 8",
          agree && order_facet_bound(8) == 24 && chain_facet_bound(8) == 26);
  bool separate = true;
  for (int d = 9; d <= 40; ++d) separate = separate && order_facet_bound(d) < chain_facet_bound(d);
  r.check("for 9 <= d <= 40 the order bound is strictly below the chain bound (29 < 36 at d = 9)",
          "for d >= 9 some chain polytope is not equivalent to any order polytope",
          separate && order_facet_bound(9) == 29 && chain_facet_bound(9) == 36);
  return r.take();
}

// Posets on [d] whose comparability graph misses exactly three pairs, from
// natural labelings. Returns (antichains, maximal chains, order facets).
struct NarrowPoset {
  int antichains;
  std::uint64_t chains;
  int order_facets;
};

std::vector<NarrowPoset> three_missing_pairs(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  std::vector<NarrowPoset> out;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      for (std::size_t c = b + 1; c < pairs.size(); ++c) {
        std::vector<Cover> relation;
        std::vector<std::vector<bool>> less(d, std::vector<bool>(d, false));
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) less[i][j] = true;
        for (auto k : {a, b, c}) less[pairs[k].first][pairs[k].second] = false;
        bool transitive = true;
        for (int i = 0; i < d && transitive; ++i)
          for (int j = i + 1; j < d && transitive; ++j)
            for (int k = j + 1; k < d && transitive; ++k)
              if (less[i][j] && less[j][k] && !less[i][k]) transitive = false;
        if (!transitive) continue;
        std::vector<Cover> covers;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            if (!less[i][j]) continue;
            bool cover = true;
            for (int k = i + 1; k < j && cover; ++k)
              if (less[i][k] && less[k][j]) cover = false;
            if (cover) covers.push_back({i + 1, j + 1});
          }
        Poset p = new_poset(d, covers);
        auto s = poset_stats(p);
        out.push_back({static_cast<int>(antichains(p).size()), s.chain_count, s.min_count + s.max_count + s.edge_count});
      }
  return out;
}

SuiteReport new_type(const Limits& limits) {
  Recorder r("new-type");
  auto six = Polytope::build(hrep_order_chain(fixtures::new_type_partition(6)), limits);
  r.check("d = 6 new-type partition: 10 vertices and 13 facets, integral",
          "the order-chain polytope of the 6-element example has 10 vertices and 13 facets",
          six.vertices.size() == 10 && six.facets.size() == 13 && is_integral(six.vertices),
          std::to_string(six.vertices.size()) + " vertices, " + std::to_string(six.facets.size()) + " facets");

  std::size_t checked = 0, hits = 0;
  for (const auto& p : enumerate_posets_up_to_iso(6, limits)) {
    ++checked;
    for (const auto& s : {hrep_order(p), hrep_chain(p)}) {
      auto poly = Polytope::build(s, limits);
      if (poly.vertices.size() == 10 && poly.facets.size() == 13) ++hits;
    }
  }
  r.check("no order or chain polytope of a poset on [6] has 10 vertices and 13 facets",
          "no order or chain polytope on [d] has d + 4 vertices and d + 7 facets", hits == 0 && checked == 318,
          std::to_string(checked) + " posets, " + std::to_string(hits) + " matches");

  for (int d = 7; d <= 8; ++d) {
    auto poly = Polytope::build(hrep_order_chain(fixtures::new_type_partition(d)), limits);
    r.check("d = " + std::to_string(d) + " new-type partition: d + 4 vertices and d + 7 facets",
            "the extended family has d + 4 vertices and d + 7 facets",
            poly.vertices.size() == static_cast<std::size_t>(d + 4) &&
                poly.facets.size() == static_cast<std::size_t>(d + 7) && is_integral(poly.vertices),
            std::to_string(poly.vertices.size()) + " vertices, " + std::to_string(poly.facets.size()) + " facets");
  }

  for (int d = 6; d <= 8; ++d) {
    std::size_t relevant = 0, bad = 0;
    for (const auto& s : three_missing_pairs(d)) {
      if (s.antichains != d + 4) continue;
      ++relevant;
      if (s.chains == 7 || s.order_facets >= d + 7) ++bad;
    }
    r.check("d = " + std::to_string(d) + ": posets with d + 4 antichains have c(P) != 7 and at most d + 6 order facets",
            "d + 4 antichains force exactly three incomparable pairs, which rules out d + 7 facets", bad == 0 && relevant > 0,
            count_detail(relevant, bad, "posets with three incomparable pairs"));
  }
  return r.take();
}

SuiteReport volume_example(const Limits& limits) {
  Recorder r("volume-example");
  auto fork = fixtures::fork_poset();
  auto vo = Polytope::build(hrep_order(fork), limits).volume(limits);
  auto vc = Polytope::build(hrep_chain(fork), limits).volume(limits);
  auto vs = Polytope::build(hrep_order_chain(fixtures::fork_small_partition()), limits).volume(limits);
  auto vl = Polytope::build(hrep_order_chain(fixtures::fork_large_partition()), limits).volume(limits);
  r.check("fork poset: V(O) = V(C) = 3/24", "V(O(P)) = V(C(P)) = e(P)/n!",
          vo == make_rational(3, 24) && vc == vo && linear_extensions_count(fork) == 3,
          to_string(vo) + ", " + to_string(vc));
  r.check("fork poset, oE = {12}: volume 1/24", "a partition can shrink the volume", vs == make_rational(1, 24),
          to_string(vs));
  r.check("fork poset, oE = {12, 13}: volume 5/24", "a partition can grow the volume", vl == make_rational(5, 24),
          to_string(vl));
  r.check("1/24 < 3/24 < 5/24", "V(OC_l) < V(O) = V(C) < V(OC_l')", vs < vo && vo < vl);

  for (int d = 1; d <= 6; ++d) {
    std::size_t checked = 0, bad = 0;
    for (const auto& p : enumerate_posets_up_to_iso(d, limits)) {
      ++checked;
      Rational expected = ratio(Integer(static_cast<unsigned long>(linear_extensions_count(p, limits))), factorial(d));
      if (Polytope::build(hrep_order(p), limits).volume(limits) != expected ||
          Polytope::build(hrep_chain(p), limits).volume(limits) != expected)
        ++bad;
    }
    r.check("d = " + std::to_string(d) + ": V(O(P)) = V(C(P)) = e(P)/d! for every poset",
            "V(O(P)) = V(C(P)) = e(P)/n!", bad == 0, count_detail(checked, bad, "posets"));
  }
  return r.take();
}

SuiteReport fibonacci_family(const Limits& limits) {
  Recorder r("fibonacci-family");
  auto rl = runs(DescentSet::make(10, {1, 2, 5, 8, 9}));
  r.check("n = 10, S = {1,2,5,8,9} has runs (2, 2, 1, 2, 2)", "runs are maximal blocks inside S or its complement",
          rl.parts == std::vector<int>{2, 2, 1, 2, 2});
  r.check("|F(2)| = 2", "|F(n)| = 2 F_n", family_F(2, limits).size() == 2);
  auto f4 = family_F(4, limits);
  r.check("F(4) has 6 sets and excludes {2}", "S is in F(n) iff every interior run has length >= 2",
          f4.size() == 6 && std::find(f4.begin(), f4.end(), DescentSet::make(4, {2})) == f4.end());
  r.check("|F(8)| = 2 F_8 = 42", "|F(n)| = 2 F_n", family_F(8, limits).size() == 42);
  bool ok = true;
  std::string sizes;
  for (int n = 2; n <= 12; ++n) {
    auto size = family_F(n, limits).size();
    ok = ok && Integer(static_cast<unsigned long>(size)) == 2 * fibonacci(n);
    sizes += (sizes.empty() ? "" : " ") + std::to_string(size);
  }
  r.check("|F(n)| = 2 F_n for 2 <= n <= 12", "|F(n)| = 2 F_n", ok, sizes);
  return r.take();
}

SuiteReport descent_max(const Limits& limits) {
  Recorder r("descent-max");
  r.check("beta(S) = 5 for n = 4, S = {2}", "beta(S) counts permutations with descent set S",
          beta(DescentSet::make(4, {2}), limits) == 5 && beta_brute_force(DescentSet::make(4, {2}), limits) == 5);
  std::size_t checked = 0, bad = 0, complement_bad = 0, extension_bad = 0;
  for (int n = 1; n <= 8; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      ElementSet e;
      for (int j = 1; j < n; ++j)
        if (mask >> (j - 1) & 1U) e.push_back(j);
      auto s = DescentSet::make(n, e);
      ++checked;
      auto b = beta(s, limits);
      if (b != beta_brute_force(s, limits)) ++bad;
      if (b != beta(s.complement(), limits)) ++complement_bad;
      if (b != static_cast<unsigned long>(linear_extensions_count(zigzag_from_descent_set(s), limits))) ++extension_bad;
    }
  r.check("inclusion-exclusion agrees with the permutation sweep for n <= 8", "beta(S) is well defined",
          bad == 0, count_detail(checked, bad, "sets"));
  r.check("beta(S) = beta(complement of S) for n <= 8", "beta(S) = beta(S-bar)", complement_bad == 0,
          count_detail(checked, complement_bad, "sets"));
  r.check("beta(S) = e(zigzag with descent set S) for n <= 8",
          "linear extensions of a zigzag are the permutations whose inverse has descent set S(P)",
          extension_bad == 0, count_detail(checked, extension_bad, "sets"));

  auto m4 = max_beta_over_F(4, limits);
  r.check("n = 4: max over F(4) is 3", "maximum of beta over F(n)", m4.value == 3);
  auto m5 = max_beta_over_F(5, limits);
  r.check("n = 5: max over F(5) is 11 at {1,4} and {2,3}", "maximum of beta over F(n)",
          m5.value == 11 &&
              m5.argmaxes == std::vector<DescentSet>{DescentSet::make(5, {1, 4}), DescentSet::make(5, {2, 3})});
  for (int n = 2; n <= 10; ++n) {
    auto m = max_beta_over_F(n, limits);
    bool attained = true;
    for (const auto& s : predicted_beta_maximizers(n))
      attained = attained && std::find(m.argmaxes.begin(), m.argmaxes.end(), s) != m.argmaxes.end();
    r.check("n = " + std::to_string(n) + ": the run-lists (1,2,...,2), (2,...,2,1) resp. (1,2,...,2,1) attain the maximum",
            "the alternating run-lists maximize beta over F(n)", attained,
            "max " + to_string(m.value) + ", " + std::to_string(m.argmaxes.size()) + " maximizers");
  }
  return r.take();
}

SuiteReport chain_argmax(const Limits& limits) {
  Recorder r("chain-argmax");
  auto two = best_chain_partition(2, limits);
  r.check("n = 2: both partitions give volume 1/2", "a 2-chain always gives a triangle",
          two.volumes == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
  for (int n = 1; n <= 7; ++n) {
    auto search = best_chain_partition(n, limits);
    bool relation = true;
    for (const auto& l : enumerate_partitions(chain_poset(n), limits))
      relation = relation && search.volumes[l.mask()] ==
                                 ratio(beta(descent_set_of_zigzag(chain_partition_zigzag(l)), limits), factorial(n));
    const bool alternating =
        std::find(search.argmaxes.begin(), search.argmaxes.end(), alternating_chain_partition(n)) != search.argmaxes.end();
    const bool matches = n < 2 || search.volume == ratio(max_beta_over_F(n, limits).value, factorial(n));
    r.check("n = " + std::to_string(n) + ": alternating partition is an argmax and max volume = max beta / n!",
            "the alternating edge partition maximizes the volume of OC over partitions of a chain",
            relation && alternating && matches,
            "max volume " + to_string(search.volume) + ", " + std::to_string(search.argmaxes.size()) + " argmaxes");
  }
  return r.take();
}

const std::vector<std::pair<std::string, std::function<SuiteReport(const Limits&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteReport(const Limits&)>>> suites{
      {"integrality-acyclic", integrality_acyclic},
      {"minimal-partition", minimal_partition},
      {"chain-equiv", chain_equiv},
      {"zigzag-equiv", zigzag_equiv},
      {"forbidden-x", forbidden_x},
      {"facet-bounds", facet_bounds},
      {"new-type", new_type},
      {"volume-example", volume_example},
      {"fibonacci-family", fibonacci_family},
      {"descent-max", descent_max},
      {"chain-argmax", chain_argmax},
  };
  return suites;
}

SuiteReport merge(std::string slug, std::initializer_list<const char*> parts, const Limits& limits) {
  SuiteReport out;
  out.slug = std::move(slug);
  for (const char* p : parts) {
    auto rep = run_suite(p, limits);
    for (auto& a : rep.assertions) out.assertions.push_back(std::move(a));
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

const std::vector<std::string>& suite_slugs() {
  static const std::vector<std::string> slugs = [] {
    std::vector<std::string> s;
    for (const auto& [slug, fn] : registry()) s.push_back(slug);
    return s;
  }();
  return slugs;
}

bool is_suite(const std::string& slug) {
  const auto& s = suite_slugs();
  return std::find(s.begin(), s.end(), slug) != s.end();
}

SuiteReport run_suite(const std::string& slug, const Limits& limits) {
  for (const auto& [name, fn] : registry())
    if (name == slug) return fn(limits);
  fail(ErrorKind::InvalidArgument, "unknown suite '" + slug + "'");
}

SuiteReport suite_integrality_acyclic(const Limits& limits) {
  return merge("integrality", {"integrality-acyclic", "minimal-partition"}, limits);
}

SuiteReport suite_equivalence(const Limits& limits) {
  return merge("equivalence", {"chain-equiv", "zigzag-equiv", "forbidden-x", "facet-bounds", "new-type"}, limits);
}

SuiteReport suite_volume_descent(const Limits& limits) {
  return merge("volume-descent", {"volume-example", "fibonacci-family", "descent-max", "chain-argmax"}, limits);
}

}  // namespace ocpoly
