#include <chrono>
#include <iostream>

#include "doctest.h"
#include "ocpoly/error.hpp"
#include "ocpoly/verify.hpp"

using namespace ocpoly;

namespace {

void expect_all_pass(const std::string& slug) {
  auto start = std::chrono::steady_clock::now();
  auto report = run_suite(slug);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  MESSAGE(slug << ": " << report.assertions.size() << " assertions, " << ms << " ms");
  CHECK(report.slug == slug);
  CHECK_FALSE(report.assertions.empty());
  for (const auto& a : report.assertions) {
    INFO(a.description << " | " << a.detail);
    CHECK(a.suite == slug);
    CHECK_FALSE(a.claim.empty());
    CHECK(a.passed);
  }
  CHECK(report.passed());
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_slugs().size() == 11);
  CHECK(is_suite("new-type"));
  CHECK_FALSE(is_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope"), Error);
}

TEST_CASE("integrality-acyclic") { expect_all_pass("integrality-acyclic"); }
TEST_CASE("minimal-partition") { expect_all_pass("minimal-partition"); }
TEST_CASE("chain-equiv") { expect_all_pass("chain-equiv"); }
TEST_CASE("zigzag-equiv") { expect_all_pass("zigzag-equiv"); }
TEST_CASE("forbidden-x") { expect_all_pass("forbidden-x"); }
TEST_CASE("facet-bounds") { expect_all_pass("facet-bounds"); }
TEST_CASE("new-type") { expect_all_pass("new-type"); }
TEST_CASE("volume-example") { expect_all_pass("volume-example"); }
TEST_CASE("fibonacci-family") { expect_all_pass("fibonacci-family"); }
TEST_CASE("descent-max") { expect_all_pass("descent-max"); }
TEST_CASE("chain-argmax") { expect_all_pass("chain-argmax"); }

TEST_CASE("a tightened limit surfaces as LimitExceeded") {
  Limits tight;
  tight.max_iso_elements = 3;
  CHECK_THROWS_AS(run_suite("forbidden-x", tight), Error);
}
