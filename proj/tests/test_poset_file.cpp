#include "doctest.h"
#include "ocpoly/error.hpp"
#include "ocpoly/fixtures.hpp"
#include "ocpoly/poset_file.hpp"

using namespace ocpoly;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_poset_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("two-element chain, no partition lines") {
  auto f = parse_poset_file("poset 2\ncover 1 2");
  CHECK(f.poset == chain_poset(2));
  CHECK_FALSE(f.explicit_partition);
  CHECK(f.partition.order_edges() == f.poset.covers());
}

TEST_CASE("seven-chain file gives the mixed chain partition") {
  auto f = read_poset_file(std::string(OCPOLY_DATA_DIR) + "/seven-chain.poset");
  CHECK(f.explicit_partition);
  CHECK(f.partition == fixtures::seven_chain_partition());
}

TEST_CASE("shipped data files match the named fixtures") {
  const std::string dir = OCPOLY_DATA_DIR;
  CHECK(read_poset_file(dir + "/four-cycle-half.poset").partition == fixtures::diamond_half_partition());
  CHECK(read_poset_file(dir + "/four-cycle-integral.poset").partition == fixtures::diamond_integral_partition());
  CHECK(read_poset_file(dir + "/fork-small.poset").partition == fixtures::fork_small_partition());
  CHECK(read_poset_file(dir + "/fork-large.poset").partition == fixtures::fork_large_partition());
  CHECK(read_poset_file(dir + "/x.poset").poset == fixtures::x_poset());
  CHECK(read_poset_file(dir + "/x-mixed.poset").partition == fixtures::x_partition());
  CHECK(read_poset_file(dir + "/new-type-6.poset").partition == fixtures::new_type_partition(6));
}

TEST_CASE("comments, blank lines and edge orientation in partition lines") {
  auto f = parse_poset_file(
      "# header\n\n  poset 3   # trailing\ncover 1 2\ncover 2 3\r\npartition o 2 1\npartition c 2 3\n");
  CHECK(f.partition.order_edges() == std::vector<Cover>{{1, 2}});
  CHECK(f.partition.chain_edges() == std::vector<Cover>{{2, 3}});
}

TEST_CASE("errors") {
  CHECK(kind_of("poset 3\ncover 1 2\ncover 2 3\npartition o 2 3\npartition c 2 3\npartition o 1 2") ==
        ErrorKind::ConflictingAssignment);
  CHECK(kind_of("poset 3\ncover 1 2\ncover 2 3\npartition o 1 2") == ErrorKind::PartialPartition);
  CHECK(kind_of("poset 3\ncover 1 2\ncover 2 3\npartition o 1 2\npartition c 2 3\npartition o 1 3") ==
        ErrorKind::UnknownEdge);
  CHECK(kind_of("cover 1 2") == ErrorKind::ParseError);
  CHECK(kind_of("poset two") == ErrorKind::ParseError);
  CHECK(kind_of("poset 2\nedge 1 2") == ErrorKind::ParseError);
  CHECK(kind_of("poset 2\npartition x 1 2") == ErrorKind::ParseError);
  CHECK(kind_of("") == ErrorKind::ParseError);
  CHECK(kind_of("poset 2\ncover 1 3") == ErrorKind::IndexOutOfRange);
  CHECK(kind_of("poset 2\ncover 1 2\ncover 2 1") == ErrorKind::DirectedCycle);
  CHECK(kind_of("poset 3\ncover 1 2\ncover 2 3\ncover 1 3") == ErrorKind::TransitiveCover);
  CHECK_THROWS_AS(read_poset_file("/nonexistent/file.poset"), Error);
}

TEST_CASE("parse error names the line") {
  try {
    parse_poset_file("poset 2\n\ncover 1 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
  }
}

TEST_CASE("format round trip") {
  for (const auto& l : {fixtures::seven_chain_partition(), fixtures::new_type_partition(7), fixtures::x_partition()}) {
    auto text = format_poset_file(l);
    auto f = parse_poset_file(text);
    CHECK(f.partition == l);
    CHECK(format_poset_file(f.partition) == text);
  }
}
