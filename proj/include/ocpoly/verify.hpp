#pragma once

#include <string>
#include <vector>

#include "ocpoly/limits.hpp"

namespace ocpoly {

struct Assertion {
  std::string suite;
  std::string description;
  // The mathematical statement being reproduced, in words.
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string slug;
  std::vector<Assertion> assertions;
  bool passed() const;
};

// integrality-acyclic, minimal-partition, chain-equiv, zigzag-equiv,
// forbidden-x, facet-bounds, new-type, volume-example, fibonacci-family,
// descent-max, chain-argmax
const std::vector<std::string>& suite_slugs();
bool is_suite(const std::string& slug);

// Throws InvalidArgument for an unknown slug.
SuiteReport run_suite(const std::string& slug, const Limits& limits = {});

// Groupings: integrality (integrality-acyclic, minimal-partition),
// equivalence (chain-equiv through new-type) and volume/descent
// (volume-example through chain-argmax).
SuiteReport suite_integrality_acyclic(const Limits& limits = {});
SuiteReport suite_equivalence(const Limits& limits = {});
SuiteReport suite_volume_descent(const Limits& limits = {});

}  // namespace ocpoly
