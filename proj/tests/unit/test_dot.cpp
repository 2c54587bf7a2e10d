#include <doctest.h>

#include "fixtures.hpp"
#include "omkit/omkit.hpp"
#include "oracle/oracle.hpp"

using namespace omkit;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::size_t edges(const std::string& dot) { return occurrences(dot, " -> "); }

}  // namespace

TEST_CASE("covering edges") {
  CHECK(edges(export_dot(catalog::boolean_algebra(1), "chain", false)) == 1);
  CHECK(edges(export_dot(catalog::mo(2), "mo2", false)) == 8);
  const BoundedInvolutivePoset e = catalog::even_subsets(4);
  CHECK(edges(export_dot(e, "even4", false)) == 12);
  CHECK(oracle::cover_count(oracle::from(e)) == 12);
  const BoundedInvolutivePoset e6 = catalog::even_subsets(6);
  CHECK(edges(export_dot(e6, "even6", false)) == oracle::cover_count(oracle::from(e6)));
}

TEST_CASE("dot layout") {
  const std::string dot = export_dot(catalog::mo(2), "mo2", false);
  CHECK(dot.rfind("digraph \"mo2\"", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n2 [label=\"a'\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(occurrences(dot, "dashed") == 0);
  CHECK(dot.back() == '\n');
}

TEST_CASE("involution edges are drawn once per pair") {
  const std::string dot = export_dot(catalog::mo(2), "mo2", true);
  CHECK(occurrences(dot, "style=dashed") == 3);
  CHECK(edges(dot) == 11);
  CHECK(export_dot(catalog::mo(2), "mo2", true) == dot);
}

TEST_CASE("labels are escaped") {
  RawPoset r;
  r.le = {{true, true}, {false, true}};
  r.inv = {1, 0};
  r.top = 1;
  r.labels = {"\"lo\"", "hi"};
  const std::string dot = export_dot(make_poset(r), "q", false);
  CHECK(dot.find("label=\"\\\"lo\\\"\"") != std::string::npos);
}
