#include <doctest.h>

#include "fixtures.hpp"
#include "omkit/omkit.hpp"
#include "oracle/oracle.hpp"

using namespace omkit;
using fixtures::kA;
using fixtures::kAc;
using fixtures::kB;
using fixtures::kBc;
using fixtures::kOne;
using fixtures::kZero;

namespace {

// 0 < a, b < c, d < 1 with both middle pairs incomparable; a' = d, b' = c.
// Involutive but missing meets and joins of orthogonal pairs.
BoundedInvolutivePoset bowtie() {
  RawPoset r;
  r.labels = {"0", "a", "b", "c", "d", "1"};
  r.le.assign(6, std::vector<bool>(6, false));
  for (int lo : {1, 2}) {
    for (int hi : {3, 4}) r.le[lo][hi] = true;
  }
  for (int x = 1; x < 5; ++x) {
    r.le[0][x] = true;
    r.le[x][5] = true;
  }
  r.le[0][5] = true;
  close_order(r.le);
  r.inv = {5, 4, 3, 2, 1, 0};
  r.top = 5;
  return make_poset(r);
}

}  // namespace

TEST_CASE("catalog orthomodular posets pass check_orthomodular") {
  for (const auto& [name, p] : catalog::orthomodular_fixtures()) {
    CAPTURE(name);
    const ValidationReport r = check_orthomodular(p);
    CHECK(r.passed());
    CHECK(is_orthomodular(p));
    CHECK(oracle::orthomodular(oracle::from(p)));
  }
}

TEST_CASE("the hexagon fails the orthomodular law with a witness") {
  const BoundedInvolutivePoset h = fixtures::hexagon();
  const ValidationReport r = check_orthomodular(h);
  CHECK_FALSE(r.passed());
  CHECK(r.holds(law::kOrthogonalJoins));
  CHECK(r.holds(law::kComplementation));
  const LawResult* om = r.find(law::kOrthomodularLaw);
  REQUIRE(om != nullptr);
  REQUIRE_FALSE(om->witnesses.empty());
  // a <= b' but a v (b' ^ a') = a v 0 = a
  CHECK(om->witnesses.front().elements == std::vector<ElementId>{1, 4, 1});
  CHECK_FALSE(oracle::orthomodular(oracle::from(h)));
}

TEST_CASE("missing meets and orthogonal joins are reported separately") {
  const BoundedInvolutivePoset p = bowtie();
  const ValidationReport r = check_orthomodular(p);
  CHECK_FALSE(r.holds(law::kOrthogonalJoins));
  CHECK_FALSE(r.holds(law::kOrthomodularMeetDefined));
  const LawResult* ortho = r.find(law::kOrthogonalJoins);
  REQUIRE(ortho != nullptr);
  // a <= b' = c, and a v b has upper bounds c, d, 1
  CHECK(ortho->witnesses.front().elements == std::vector<ElementId>{1, 2});
}

TEST_CASE("implication on the six-element structure") {
  const BoundedInvolutivePoset p = catalog::mo(2);
  CHECK(implication(p, kOne, kA) == p.pair(kZero, kA));
  CHECK(implication(p, kA, kA) == p.pair(kAc, kOne));
  CHECK(implication(p, kA, kB) == p.singleton(kAc));
  for (ElementId x = 0; x < p.size(); ++x) {
    CHECK(implication(p, x, p.bot()) == p.singleton(p.inv(x)));
  }
  CHECK(implication(p, kOne, kOne) == p.full());
}

TEST_CASE("implication on even subsets of {1..4}") {
  const BoundedInvolutivePoset e = catalog::even_subsets(4);
  const ElementId x = *e.find("{1,2}");
  const ElementId y = *e.find("{1,3}");
  // Frozen from the brute-force oracle: {3,4} v L({1,2},{1,3}) = {{3,4}}.
  CHECK(implication(e, x, y) == e.singleton(*e.find("{3,4}")));
  CHECK(oracle::to_set(implication(e, x, y)) == *oracle::implication(oracle::from(e), x, y));
}

TEST_CASE("implication agrees with the oracle on every catalog structure") {
  for (const auto& [name, p] : catalog::orthomodular_fixtures()) {
    CAPTURE(name);
    const oracle::Plain plain = oracle::from(p);
    std::size_t mismatches = 0;
    for (ElementId x = 0; x < p.size(); ++x) {
      for (ElementId y = 0; y < p.size(); ++y) {
        const auto expected = oracle::implication(plain, x, y);
        if (!expected || oracle::to_set(implication(p, x, y)) != *expected) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("implication throws when a needed join is undefined") {
  const BoundedInvolutivePoset p = bowtie();
  // c -> c = b v {0, a, b, c}, and a v b is undefined
  CHECK_THROWS_AS(implication(p, 3, 3), PartialityError);
  CHECK_THROWS_AS(implication_table(p), PartialityError);
}

TEST_CASE("cone decomposition holds on orthomodular posets") {
  for (const auto& [name, p] : catalog::orthomodular_fixtures()) {
    CAPTURE(name);
    CHECK(check_cone_decomposition(p).passed());
  }
  const BoundedInvolutivePoset p = catalog::mo(2);
  CHECK(lift_join(p, lift_meet(p, upper_cone(p, p.singleton(p.top())), p.inv(p.top())), p.top()) ==
        p.singleton(p.top()));
}

TEST_CASE("cone decomposition fails on the hexagon and the bowtie") {
  const ValidationReport h = check_cone_decomposition(fixtures::hexagon());
  CHECK_FALSE(h.passed());
  CHECK_FALSE(h.holds(law::kConeDecompositionLower));

  const ValidationReport b = check_cone_decomposition(bowtie());
  CHECK_FALSE(b.passed());
  const LawResult* upper = b.find(law::kConeDecompositionUpper);
  REQUIRE(upper != nullptr);
  CHECK(upper->violations > 0);
}

TEST_CASE("implication properties hold on orthomodular posets") {
  for (const auto& [name, p] : catalog::orthomodular_fixtures()) {
    CAPTURE(name);
    CHECK(check_implication_properties(p).passed());
  }
  const BoundedInvolutivePoset p = catalog::mo(2);
  CHECK(implication(p, kA, kAc) == p.singleton(kAc));
  CHECK(implication(p, kA, kA) == interval(p, kAc, kOne));
  CHECK(implication(p, kBc, kOne) == interval(p, kB, kOne));
}

TEST_CASE("implication properties fail on the hexagon") {
  const ValidationReport r = check_implication_properties(fixtures::hexagon());
  CHECK_FALSE(r.passed());
  const LawResult* iii = r.find(law::kImplicationIII);
  REQUIRE(iii != nullptr);
  CHECK(iii->violations > 0);
  // b' -> b' = b v {0, a, b'} = {b, 1}, not [b, 1] = {b, a', 1}
  const BoundedInvolutivePoset h = fixtures::hexagon();
  CHECK(implication(h, 4, 4) == h.pair(2, 5));
}
