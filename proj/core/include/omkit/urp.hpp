#pragma once

#include <array>
#include <vector>

#include "omkit/poset.hpp"
#include "omkit/report.hpp"
#include "omkit/tables.hpp"

namespace omkit {

// (R, <=, odot, ->, ', 0, 1) with an arbitrary partial product and an
// arbitrary subset-valued implication. Construction only checks dimensions;
// the axioms are checked by validate_urp so that broken tables can be held
// and reported on.
class UnsharpResiduatedStructure {
 public:
  UnsharpResiduatedStructure(BoundedInvolutivePoset poset, PartialBinaryOp odot,
                             SetValuedBinaryOp imp);

  int size() const { return poset_.size(); }
  const BoundedInvolutivePoset& poset() const { return poset_; }
  const PartialBinaryOp& odot() const { return odot_; }
  const SetValuedBinaryOp& imp() const { return imp_; }

  friend bool operator==(const UnsharpResiduatedStructure&,
                         const UnsharpResiduatedStructure&) = default;

 private:
  BoundedInvolutivePoset poset_;
  PartialBinaryOp odot_;
  SetValuedBinaryOp imp_;
};

using Triple = std::array<ElementId, 3>;

namespace law {
inline constexpr const char* kR1 = "R1";
inline constexpr const char* kMonoidAssociativity = "monoid-associativity";
inline constexpr const char* kMonoidUnit = "monoid-unit";
inline constexpr const char* kMonoidCommutativity = "monoid-commutativity";
inline constexpr const char* kR2Definedness = "R2-definedness";
inline constexpr const char* kR2Monotonicity = "R2-monotonicity";
inline constexpr const char* kR2Propagation = "R2-definedness-propagation";
inline constexpr const char* kR3Forward = "R3-forward";
inline constexpr const char* kR3Backward = "R3-backward";
inline constexpr const char* kR3Undefined = "R3-undefined-products";
inline constexpr const char* kR3Prime = "R3prime";
inline constexpr const char* kR3Agreement = "R3-R3prime-agreement";
inline constexpr const char* kR4 = "R4";
inline constexpr const char* kDivisible = "divisible";
inline constexpr const char* kIdempotent = "idempotent";
inline constexpr const char* kProductIsMeet = "product-is-meet";
inline constexpr const char* kZeroAbsorbing = "zero-absorbing";
}  // namespace law

// Partial commutative monoid: associativity where both bracketings are
// defined, 1 as two-sided unit, commutativity including definedness.
ValidationReport check_partial_monoid(const UnsharpResiduatedStructure& s,
                                      std::size_t witness_cap = kDefaultWitnessCap);

// x' <= y  =>  x odot y defined;
// x <= y, x odot z and y odot z defined  =>  x odot z <= y odot z.
// Also reports, as info, pairs where x odot z is defined but y odot z is not.
ValidationReport check_R2(const UnsharpResiduatedStructure& s,
                          std::size_t witness_cap = kDefaultWitnessCap);

// Unsharp adjointness, as set inclusions:
//   U(x,y') odot y  is a subset of  UL(y,z)   iff   U(x,y') is a subset of U(y -> z).
ValidationReport check_R3(const UnsharpResiduatedStructure& s,
                          std::size_t witness_cap = kDefaultWitnessCap);

// The same condition in order form:
//   U(x,y') odot y >= L(y,z)   iff   U(x,y') >= y -> z
// plus a comparison of its complete failing-triple set with that of R3.
ValidationReport check_R3_dual(const UnsharpResiduatedStructure& s,
                               std::size_t witness_cap = kDefaultWitnessCap);

// Complete, sorted lists of triples (x, y, z) violating each formulation.
// Triples where some u odot y is undefined are excluded from both.
std::vector<Triple> r3_failing_triples(const UnsharpResiduatedStructure& s);
std::vector<Triple> r3_dual_failing_triples(const UnsharpResiduatedStructure& s);

// x <= y  =>  U(x' -> y) = U(y).
ValidationReport check_R4(const UnsharpResiduatedStructure& s,
                          std::size_t witness_cap = kDefaultWitnessCap);

// x odot (x -> y) = L(x, y) as sets, every product defined.
ValidationReport check_divisible(const UnsharpResiduatedStructure& s,
                                 std::size_t witness_cap = kDefaultWitnessCap);

ValidationReport check_idempotent(const UnsharpResiduatedStructure& s,
                                  std::size_t witness_cap = kDefaultWitnessCap);

// a odot b = a ^ b wherever both sides are defined. Throws PreconditionError
// if s is not idempotent.
ValidationReport check_product_is_meet(const UnsharpResiduatedStructure& s,
                                  std::size_t witness_cap = kDefaultWitnessCap);

// x odot 0 = 0 odot x = 0 for all x.
ValidationReport check_zero_absorbing(const UnsharpResiduatedStructure& s,
                                      std::size_t witness_cap = kDefaultWitnessCap);

// Everything above. The report fails iff one of (R1)-(R4), the monoid laws,
// R3/R3' agreement or (for idempotent structures) product-is-meet fails.
// Divisibility and idempotence are reported as properties; zero absorption
// and definedness propagation as info.
ValidationReport validate_urp(const UnsharpResiduatedStructure& s,
                              std::size_t witness_cap = kDefaultWitnessCap);

// validate_urp passed and the structure is divisible and idempotent.
bool is_divisible_idempotent_urp(const ValidationReport& report);

}  // namespace omkit
