#include <algorithm>

#include "doctest.h"
#include "ocpoly/error.hpp"
#include "ocpoly/fixtures.hpp"
#include "ocpoly/poset.hpp"
#include "oracles.hpp"

using namespace ocpoly;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ocpoly::Error");
  return ErrorKind::InvalidArgument;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("new_poset validates the Hasse diagram") {
  auto anti = new_poset(2, {});
  CHECK(anti.size() == 2);
  CHECK(anti.covers().empty());

  auto diamond = new_poset(4, {{3, 4}, {1, 2}, {2, 4}, {1, 3}});
  CHECK(diamond.covers() == std::vector<Cover>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(diamond.less(1, 4));
  CHECK_FALSE(diamond.comparable(2, 3));

  CHECK(kind_of([] { new_poset(3, {{1, 2}, {2, 3}, {1, 3}}); }) == ErrorKind::TransitiveCover);
  CHECK(kind_of([] { new_poset(2, {{1, 3}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { new_poset(2, {{0, 1}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { new_poset(3, {{1, 2}, {2, 3}, {3, 1}}); }) == ErrorKind::DirectedCycle);
  CHECK(kind_of([] { new_poset(2, {{1, 2}, {2, 1}}); }) == ErrorKind::DirectedCycle);
  CHECK(kind_of([] { new_poset(2, {{1, 2}, {1, 2}}); }) == ErrorKind::DuplicateCover);
  CHECK(kind_of([] { new_poset(0, {}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("order ideals") {
  CHECK(order_ideals(chain_poset(3)) ==
        std::vector<ElementSet>{{}, {1}, {1, 2}, {1, 2, 3}});
  auto fork = fixtures::fork_poset();
  CHECK(order_ideals(fork).size() == 7);
  CHECK(order_ideals(fork) == oracle::ideals(fork));
  CHECK(order_ideals(antichain_poset(3)).size() == 8);
}

TEST_CASE("antichains") {
  CHECK(antichains(chain_poset(3)) == std::vector<ElementSet>{{}, {1}, {2}, {3}});
  CHECK(antichains(fixtures::fork_poset()) ==
        std::vector<ElementSet>{{}, {1}, {2}, {3}, {4}, {2, 3}, {2, 4}});
  CHECK(antichains(antichain_poset(3)).size() == 8);
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(chain_poset(3)) == std::vector<Chain>{{1, 2, 3}});
  CHECK(maximal_chains(fixtures::fork_poset()) == std::vector<Chain>{{1, 2}, {1, 3, 4}});
  CHECK(maximal_chains(fixtures::diamond_poset()) == std::vector<Chain>{{1, 2, 4}, {1, 3, 4}});
  CHECK(maximal_chain_count(fixtures::diamond_poset()) == 2);
}

TEST_CASE("linear extensions") {
  for (int n = 1; n <= 6; ++n) CHECK(linear_extensions_count(chain_poset(n)) == 1);
  CHECK(linear_extensions_count(antichain_poset(3)) == 6);
  CHECK(linear_extensions_count(fixtures::fork_poset()) == 3);
  Limits tight;
  tight.max_extension_elements = 4;
  CHECK(kind_of([&] { linear_extensions_count(antichain_poset(5), tight); }) ==
        ErrorKind::LimitExceeded);
}

TEST_CASE("zigzag posets and descent sets") {
  CHECK(zigzag_from_descent_set(DescentSet::make(3, {})) == chain_poset(3));
  CHECK(zigzag_from_descent_set(DescentSet::make(3, {1, 2})).covers() ==
        std::vector<Cover>{{2, 1}, {3, 2}});
  auto z = zigzag_from_descent_set(DescentSet::make(5, {1, 4}));
  CHECK(z.covers() == std::vector<Cover>{{2, 1}, {2, 3}, {3, 4}, {5, 4}});

  CHECK(descent_set_of_zigzag(chain_poset(4)).elements.empty());
  CHECK(descent_set_of_zigzag(z).elements == ElementSet{1, 4});
  CHECK(kind_of([] { descent_set_of_zigzag(fixtures::diamond_poset()); }) == ErrorKind::NotZigzag);
  CHECK(kind_of([] { descent_set_of_zigzag(antichain_poset(3)); }) == ErrorKind::NotZigzag);
  CHECK(kind_of([] { DescentSet::make(3, {3}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("zigzag bijection round-trips for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      ElementSet s;
      for (int j = 1; j < n; ++j)
        if (mask >> (j - 1) & 1U) s.push_back(j);
      auto d = DescentSet::make(n, s);
      auto p = zigzag_from_descent_set(d);
      CHECK(is_zigzag(p));
      CHECK(descent_set_of_zigzag(p) == d);
    }
  }
}

TEST_CASE("dual posets") {
  CHECK(dual_poset(chain_poset(2)).covers() == std::vector<Cover>{{2, 1}});
  CHECK(dual_poset(antichain_poset(3)) == antichain_poset(3));
  CHECK(dual_poset(fixtures::fork_poset()).covers() ==
        std::vector<Cover>{{2, 1}, {3, 1}, {4, 3}});
}

TEST_CASE("poset statistics") {
  CHECK(poset_stats(chain_poset(3)) == PosetStats{1, 1, 2, 1});
  CHECK(poset_stats(fixtures::fork_poset()) == PosetStats{1, 2, 3, 2});
  CHECK(poset_stats(complete_bipartite_poset(3, 2)) == PosetStats{3, 2, 6, 6});
}

TEST_CASE("disjoint unions") {
  CHECK(disjoint_union(chain_poset(2), chain_poset(1)).covers() == std::vector<Cover>{{1, 2}});
  CHECK(disjoint_union(antichain_poset(2), antichain_poset(3)) == antichain_poset(5));
  CHECK(disjoint_union(chain_poset(2), chain_poset(2)).covers() ==
        std::vector<Cover>{{1, 2}, {3, 4}});
}

TEST_CASE("isomorphism classes") {
  const int expected[] = {1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) {
    auto classes = enumerate_posets_up_to_iso(n);
    CHECK(static_cast<int>(classes.size()) == expected[n - 1]);
  }
  CHECK(enumerate_posets_up_to_iso(2).size() == 2);
  Limits limits;
  CHECK(kind_of([&] { enumerate_posets_up_to_iso(7, limits); }) == ErrorKind::LimitExceeded);
}

TEST_CASE("isomorphism class counts match a brute-force relation sweep") {
  for (int n = 1; n <= 6; ++n)
    CHECK(oracle::poset_classes_brute_force(n) ==
          static_cast<int>(enumerate_posets_up_to_iso(n).size()));
}

TEST_CASE("representatives are pairwise non-isomorphic and canonical") {
  for (int n = 1; n <= 5; ++n) {
    auto classes = enumerate_posets_up_to_iso(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(canonical_poset(classes[i]) == classes[i]);
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(are_isomorphic(classes[i], classes[j]));
    }
  }
  auto p = fixtures::fork_poset();
  CHECK(are_isomorphic(p, relabel(p, {4, 1, 2, 3})));
}

TEST_CASE("order-theoretic invariants over all small posets") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets_up_to_iso(n)) {
      auto ideals = order_ideals(p);
      CHECK(ideals.size() == antichains(p).size());
      auto dual = dual_poset(p);
      CHECK(dual_poset(dual) == p);
      CHECK(linear_extensions_count(p) == linear_extensions_count(dual));
      CHECK(maximal_chain_count(p) == maximal_chains(p).size());
      if (n <= 5) {
        CHECK(ideals == oracle::ideals(p));
        CHECK(antichains(p) == oracle::antichains(p));
        CHECK(linear_extensions_count(p) == oracle::linear_extensions(p));
      }
    }
  }
}

TEST_CASE("linear extensions of disjoint unions") {
  auto small = enumerate_posets_up_to_iso(3);
  auto four = enumerate_posets_up_to_iso(4);
  for (const auto& p : small) {
    for (const auto& q : four) {
      auto u = disjoint_union(p, q);
      auto expected = linear_extensions_count(p) * linear_extensions_count(q) * binomial(7, 3);
      CHECK(linear_extensions_count(u) == expected);
      CHECK(oracle::linear_extensions(u) == expected);
    }
  }
  CHECK(linear_extensions_count(antichain_poset(7)) == 5040);
}
