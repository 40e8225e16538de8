#pragma once

// Line-oriented poset files:
//
//   # comment
//   poset <d>
//   cover <i> <j>          i is covered by j
//   partition o <i> <j>    the edge {i, j} goes to oE
//   partition c <i> <j>    the edge {i, j} goes to cE
//
// Without partition lines every edge is an order edge.

#include <string>
#include <string_view>

#include "ocpoly/edge_partition.hpp"
#include "ocpoly/limits.hpp"
#include "ocpoly/poset.hpp"

namespace ocpoly {

struct PosetFile {
  std::string source;
  Poset poset;
  EdgePartition partition;
  bool explicit_partition = false;
};

PosetFile parse_poset_file(std::string_view text, const Limits& limits = {});
PosetFile read_poset_file(const std::string& path, const Limits& limits = {});

// Canonical text: covers in sorted order, then o lines, then c lines.
std::string format_poset_file(const EdgePartition& partition);

}  // namespace ocpoly
