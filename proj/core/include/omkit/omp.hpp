#pragma once

#include "omkit/poset.hpp"
#include "omkit/report.hpp"
#include "omkit/tables.hpp"

namespace omkit {

namespace law {
inline constexpr const char* kOrthogonalJoins = "orthogonal-joins";
inline constexpr const char* kOrthomodularMeetDefined = "orthomodular-meet-defined";
inline constexpr const char* kOrthomodularJoinDefined = "orthomodular-join-defined";
inline constexpr const char* kOrthomodularLaw = "orthomodular-law";
inline constexpr const char* kComplementation = "complementation";
inline constexpr const char* kConeDecompositionUpper = "cone-decomposition-upper";
inline constexpr const char* kConeDecompositionLower = "cone-decomposition-lower";
inline constexpr const char* kImplicationI = "implication-i";
inline constexpr const char* kImplicationII = "implication-ii";
inline constexpr const char* kImplicationIII = "implication-iii";
inline constexpr const char* kImplicationIV = "implication-iv";
inline constexpr const char* kImplicationV = "implication-v";
}  // namespace law

// Orthomodular poset axioms:
//   x <= y'  =>  x v y defined
//   x <= y   =>  y ^ x' defined, x v (y ^ x') defined and equal to y
// plus the derived complementation x v x' = 1, x ^ x' = 0.
// Missing meets and missing joins are reported under separate laws.
ValidationReport check_orthomodular(const BoundedInvolutivePoset& p,
                                    std::size_t witness_cap = kDefaultWitnessCap);

bool is_orthomodular(const BoundedInvolutivePoset& p);

// x -> y := x' v L(x, y). Never empty on an orthomodular poset (it contains
// x'). Throws PartialityError if some t v x' with t in L(x, y) is undefined.
Subset implication(const BoundedInvolutivePoset& p, ElementId x, ElementId y);

SetValuedBinaryOp implication_table(const BoundedInvolutivePoset& p);

// For all a, b:
//   U(a, b) = a v (U(a, b) ^ a')
//   L(a, b) = b ^ (L(a, b) v b')
// as set equalities with every partial operation defined.
ValidationReport check_cone_decomposition(const BoundedInvolutivePoset& p,
                              std::size_t witness_cap = kDefaultWitnessCap);

// For all x, y:
//   (i)   x -> 0 = {x'}
//   (ii)  1 -> x = L(x)
//   (iii) x <= y  =>  x -> y = [x', 1]
//   (iv)  x <= y  =>  U(x -> y) = {1}
//   (v)   x -> x' = {x'}
ValidationReport check_implication_properties(
    const BoundedInvolutivePoset& p,
    std::size_t witness_cap = kDefaultWitnessCap);

}  // namespace omkit
