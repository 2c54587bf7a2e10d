#include <doctest.h>

#include "fixtures.hpp"
#include "omkit/omkit.hpp"

using namespace omkit;
using fixtures::kA;
using fixtures::kAc;
using fixtures::kB;
using fixtures::kOne;
using fixtures::kZero;

namespace {

RawPoset two_chain(std::vector<ElementId> inv) {
  RawPoset r;
  r.le = {{true, true}, {false, true}};
  r.inv = std::move(inv);
  r.bot = 0;
  r.top = 1;
  return r;
}

ElementId id(const BoundedInvolutivePoset& p, std::string_view label) {
  const auto x = p.find(label);
  REQUIRE(x.has_value());
  return *x;
}

}  // namespace

TEST_CASE("validate_poset accepts the 2-chain with swapping involution") {
  const PosetValidation v = validate_poset(two_chain({1, 0}));
  CHECK(v.report.passed());
  REQUIRE(v.poset.has_value());
  CHECK(v.poset->size() == 2);
  CHECK(v.poset->inv(0) == 1);
}

TEST_CASE("validate_poset rejects the identity involution on the 2-chain") {
  const PosetValidation v = validate_poset(two_chain({0, 1}));
  CHECK_FALSE(v.report.passed());
  CHECK_FALSE(v.poset.has_value());
  CHECK_FALSE(v.report.holds(law::kAntitone));
  const LawResult* swap = v.report.find(law::kBoundsSwap);
  REQUIRE(swap != nullptr);
  REQUIRE_FALSE(swap->witnesses.empty());
  // 0' = 0 where 1 was required
  CHECK(swap->witnesses.front().elements == std::vector<ElementId>{0, 0, 1});
  CHECK(v.report.holds(law::kInvolutive));
}

TEST_CASE("validate_poset accepts the six-element atom/coatom carrier") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(validate_poset(p.raw()).report.passed());
}

TEST_CASE("validate_poset reports each order law with a witness") {
  RawPoset r;
  r.le = {{true, true, false}, {false, true, true}, {false, false, true}};
  r.inv = {2, 1, 0};
  r.bot = 0;
  r.top = 2;
  PosetValidation v = validate_poset(r);
  const LawResult* trans = v.report.find(law::kTransitive);
  REQUIRE(trans != nullptr);
  CHECK(trans->violations == 1);
  CHECK(trans->witnesses.front().elements == std::vector<ElementId>{0, 1, 2});
  CHECK_FALSE(v.report.holds(law::kBounds));

  r.le = {{true, true, true}, {true, true, true}, {false, false, true}};
  v = validate_poset(r);
  CHECK_FALSE(v.report.holds(law::kAntisymmetric));

  r.le = {{false, true, true}, {false, true, true}, {false, false, true}};
  v = validate_poset(r);
  CHECK_FALSE(v.report.holds(law::kReflexive));

  r.le = {{true, true, true}, {false, true, true}, {false, false, true}};
  r.inv = {2, 0, 0};
  v = validate_poset(r);
  CHECK_FALSE(v.report.holds(law::kInvolutive));
}

TEST_CASE("dimension problems are structural errors, not law violations") {
  RawPoset r = two_chain({1, 0});
  r.inv = {1};
  CHECK_THROWS_AS(validate_poset(r), StructureError);
  r = two_chain({1, 0});
  r.le[1].push_back(true);
  CHECK_THROWS_AS(validate_poset(r), StructureError);
  r = two_chain({1, 2});
  CHECK_THROWS_AS(validate_poset(r), StructureError);
  r = two_chain({1, 0});
  r.top = 7;
  CHECK_THROWS_AS(validate_poset(r), StructureError);

  RawPoset big;
  big.le.assign(65, std::vector<bool>(65, true));
  big.inv.assign(65, 0);
  CHECK_THROWS_AS(validate_poset(big), StructureError);
}

TEST_CASE("a one-element carrier is accepted with a note") {
  RawPoset r;
  r.le = {{true}};
  r.inv = {0};
  const PosetValidation v = validate_poset(r);
  CHECK(v.report.passed());
  CHECK(v.poset.has_value());
  CHECK(v.report.notes().size() == 1);
}

TEST_CASE("close_order takes the reflexive-transitive closure") {
  std::vector<std::vector<bool>> le(3, std::vector<bool>(3, false));
  le[0][1] = true;
  le[1][2] = true;
  close_order(le);
  CHECK(le[0][2]);
  CHECK(le[1][1]);
  CHECK_FALSE(le[2][0]);
}

TEST_CASE("lower_cone") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(lower_cone(p, p.none()) == p.full());
  CHECK(lower_cone(p, p.singleton(kOne)) == p.full());
  CHECK(lower_cone(p, p.pair(kA, kB)) == p.singleton(kZero));
}

TEST_CASE("upper_cone") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(upper_cone(p, p.none()) == p.full());
  CHECK(upper_cone(p, p.singleton(kA)) == p.pair(kA, kOne));

  // Frozen from a brute-force scan of all 32 even subsets.
  const BoundedInvolutivePoset e = catalog::even_subsets(6);
  const Subset cone = upper_cone(e, e.pair(id(e, "{1,2}"), id(e, "{3,4}")));
  CHECK(cone == e.pair(id(e, "{1,2,3,4}"), id(e, "{1,2,3,4,5,6}")));
}

TEST_CASE("meet on even subsets of {1..6}") {
  const BoundedInvolutivePoset e = catalog::even_subsets(6);
  CHECK(meet(e, id(e, "{1,2}"), id(e, "{1,2,3,4}")) == id(e, "{1,2}"));
  CHECK_FALSE(meet(e, id(e, "{1,2,3,4}"), id(e, "{2,3,4,5}")).has_value());
  for (ElementId x = 0; x < e.size(); ++x) {
    CHECK(meet(e, x, x) == x);
    CHECK(meet(e, x, e.top()) == x);
  }
}

TEST_CASE("join") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  for (ElementId x = 0; x < p.size(); ++x) CHECK(join(p, x, p.bot()) == x);
  CHECK(join(p, kA, kAc) == kOne);

  // Frozen from a brute-force scan of the upper cone.
  const BoundedInvolutivePoset e = catalog::even_subsets(6);
  CHECK(join(e, id(e, "{1,2}"), id(e, "{3,4}")) == id(e, "{1,2,3,4}"));
  CHECK_FALSE(join(e, id(e, "{5,6}"), id(e, "{1,6}")).has_value());
}

TEST_CASE("interval") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(interval(p, p.bot(), p.top()) == p.full());
  for (ElementId x = 0; x < p.size(); ++x) CHECK(interval(p, x, x) == p.singleton(x));
  CHECK(interval(p, kAc, kOne) == p.pair(kAc, kOne));
  CHECK_THROWS_AS(interval(p, kA, kB), PreconditionError);
  CHECK_THROWS_AS(interval(p, kOne, kZero), PreconditionError);
}

TEST_CASE("lift_join") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(lift_join(p, p.singleton(p.bot()), kA) == p.singleton(kA));
  // 0 v a' = a', a v a' = 1
  CHECK(lift_join(p, p.pair(kZero, kA), kAc) == p.pair(kAc, kOne));
  CHECK(lift_join(p, p.none(), kA) == p.none());
  CHECK(orthogonal_to(p, p.pair(kZero, kA), kA) == false);
  CHECK(orthogonal_to(p, p.pair(kZero, kAc), kA));

  const BoundedInvolutivePoset e = catalog::even_subsets(6);
  const ElementId x = id(e, "{5,6}");
  const ElementId y = id(e, "{1,6}");
  try {
    lift_join(e, e.pair(e.bot(), x), y);
    FAIL("expected PartialityError");
  } catch (const PartialityError& err) {
    CHECK(err.witness() == std::vector<ElementId>{x, y});
  }
}

TEST_CASE("lift_meet is the order dual of lift_join") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(lift_meet(p, p.pair(kOne, kA), kAc) == p.pair(kAc, kZero));
}

TEST_CASE("set_le compares every pair and is vacuous on empty sides") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  CHECK(set_le(p, p.pair(kZero, kA), p.pair(kA, kOne)));
  CHECK_FALSE(set_le(p, p.pair(kZero, kA), p.pair(kB, kOne)));
  CHECK(set_le(p, p.none(), p.singleton(kA)));
  CHECK(set_le(p, p.singleton(kOne), p.none()));
}

TEST_CASE("covering_pairs") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  const auto covers = covering_pairs(p);
  CHECK(covers.size() == 8);
  CHECK(covers.front() == std::pair<ElementId, ElementId>{kZero, kA});
}

TEST_CASE("relabel moves every component along the permutation") {
  const BoundedInvolutivePoset p = catalog::example2().poset();
  const std::vector<ElementId> perm = {5, 4, 3, 2, 1, 0};
  const BoundedInvolutivePoset q = relabel(p, perm);
  CHECK(q.bot() == 5);
  CHECK(q.top() == 0);
  CHECK(q.label(4) == "a");
  CHECK(q.inv(4) == 3);
  CHECK(relabel(q, perm) == p);
}
