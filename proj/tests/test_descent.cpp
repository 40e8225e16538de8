#include "doctest.h"
#include "ocpoly/descent.hpp"
#include "ocpoly/equivalence.hpp"
#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"
#include "oracles.hpp"

using namespace ocpoly;

namespace {

std::vector<DescentSet> all_subsets(int n) {
  std::vector<DescentSet> out;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    ElementSet s;
    for (int j = 1; j < n; ++j)
      if (mask >> (j - 1) & 1U) s.push_back(j);
    out.push_back(DescentSet::make(n, s));
  }
  return out;
}

}  // namespace

TEST_CASE("run lists") {
  auto r = runs(DescentSet::make(10, {1, 2, 5, 8, 9}));
  CHECK(r.parts == std::vector<int>{2, 2, 1, 2, 2});
  CHECK(r.starts_in_set);
  auto empty = runs(DescentSet::make(6, {}));
  CHECK(empty.parts == std::vector<int>{5});
  CHECK_FALSE(empty.starts_in_set);
  auto full = runs(DescentSet::make(6, {1, 2, 3, 4, 5}));
  CHECK(full.parts == std::vector<int>{5});
  CHECK(full.starts_in_set);
  for (int n = 2; n <= 9; ++n)
    for (const auto& s : all_subsets(n)) CHECK(subset_from_runs(runs(s)) == s);
  CHECK_THROWS_AS(subset_from_runs(RunList{5, {1, 1}, false}), Error);
}

TEST_CASE("beta") {
  for (int n = 1; n <= 12; ++n) CHECK(beta(DescentSet::make(n, {})) == 1);
  CHECK(beta(DescentSet::make(4, {2})) == 5);
  CHECK(beta_brute_force(DescentSet::make(4, {2})) == 5);
  CHECK(oracle::descent_count(4, {2}) == 5);
  // alternating permutations of 10: the Euler zigzag number 50521
  CHECK(beta(DescentSet::make(10, {2, 4, 6, 8})) == 50521);
  Limits limits;
  CHECK_THROWS_AS(beta(DescentSet::make(13, {}), limits), Error);
  CHECK_THROWS_AS(beta_brute_force(DescentSet::make(10, {}), limits), Error);
}

TEST_CASE("beta methods agree and respect complements") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : all_subsets(n)) {
      auto b = beta(s);
      CHECK(b == beta_brute_force(s));
      CHECK(b == beta(s.complement()));
      if (n <= 6) CHECK(b == oracle::descent_count(n, s.elements));
    }
  }
}

TEST_CASE("beta counts linear extensions of zigzags") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : all_subsets(n))
      CHECK(beta(s) == static_cast<unsigned long>(linear_extensions_count(zigzag_from_descent_set(s))));
}

TEST_CASE("family F(n)") {
  auto f2 = family_F(2);
  CHECK(f2.size() == 2);
  auto f4 = family_F(4);
  CHECK(f4.size() == 6);
  CHECK(std::find(f4.begin(), f4.end(), DescentSet::make(4, {2})) == f4.end());
  CHECK(family_F(6).size() == 16);
  for (int n = 2; n <= 12; ++n) CHECK(Integer(static_cast<unsigned long>(family_F(n).size())) == 2 * fibonacci(n));
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
}

TEST_CASE("maximum of beta over F(n)") {
  auto m4 = max_beta_over_F(4);
  CHECK(m4.value == 3);
  for (const auto& s : predicted_beta_maximizers(4))
    CHECK(std::find(m4.argmaxes.begin(), m4.argmaxes.end(), s) != m4.argmaxes.end());
  CHECK(std::find(m4.argmaxes.begin(), m4.argmaxes.end(), subset_from_runs({4, {1, 2}, true})) !=
        m4.argmaxes.end());
  CHECK(std::find(m4.argmaxes.begin(), m4.argmaxes.end(), subset_from_runs({4, {2, 1}, true})) !=
        m4.argmaxes.end());

  auto m5 = max_beta_over_F(5);
  CHECK(m5.value == 11);
  CHECK(m5.argmaxes == std::vector<DescentSet>{DescentSet::make(5, {1, 4}), DescentSet::make(5, {2, 3})});

  for (int n = 2; n <= 10; ++n) {
    auto m = max_beta_over_F(n);
    for (const auto& s : predicted_beta_maximizers(n)) {
      CHECK(std::find(m.argmaxes.begin(), m.argmaxes.end(), s) != m.argmaxes.end());
      CHECK(beta(s) == m.value);
    }
  }
  CHECK_THROWS_AS(max_beta_over_F(11), Error);
}

TEST_CASE("maximal product compositions") {
  CHECK(max_product_composition(5).product == 6);
  CHECK(max_product_composition(5).parts == std::vector<int>{3, 2});
  CHECK(max_product_composition(6).product == 9);
  CHECK(max_product_composition(7).product == 12);
  CHECK(max_product_composition(7).parts == std::vector<int>{3, 2, 2});
  CHECK(max_product_composition(1).product == 1);
  for (int d = 1; d <= 40; ++d) CHECK(max_product_composition(d).product == max_product_closed_form(d));
  CHECK_THROWS_AS(max_product_composition(41), Error);
}

TEST_CASE("best chain partitions") {
  auto two = best_chain_partition(2);
  CHECK(two.volumes == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
  CHECK(two.argmaxes.size() == 2);

  auto four = best_chain_partition(4);
  CHECK(four.volume == make_rational(3, 24));
  CHECK(std::find(four.argmaxes.begin(), four.argmaxes.end(), alternating_chain_partition(4)) !=
        four.argmaxes.end());
}

TEST_CASE("chain partition volumes are beta over n!") {
  for (int n = 1; n <= 7; ++n) {
    auto search = best_chain_partition(n);
    for (const auto& l : enumerate_partitions(chain_poset(n))) {
      auto q = chain_partition_zigzag(l);
      Rational expected(beta(descent_set_of_zigzag(q)), factorial(n));
      expected.canonicalize();
      CHECK(search.volumes[l.mask()] == expected);
    }
    if (n >= 2) {
      Rational best(max_beta_over_F(n).value, factorial(n));
      best.canonicalize();
      CHECK(search.volume == best);
      CHECK(std::find(search.argmaxes.begin(), search.argmaxes.end(), alternating_chain_partition(n)) !=
            search.argmaxes.end());
    }
  }
}
