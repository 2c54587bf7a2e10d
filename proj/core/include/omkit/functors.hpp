#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "omkit/poset.hpp"
#include "omkit/urp.hpp"

namespace omkit {

class FunctorError : public std::runtime_error {
 public:
  enum class Reason {
    not_orthomodular,
    not_idempotent,
    meet_hypothesis,         // some x' <= y with x ^ y undefined
    implication_hypothesis,  // stored x -> y differs from x' v L(x, y)
    not_urp,
  };

  FunctorError(Reason reason, const std::string& what, std::vector<ElementId> witness)
      : std::runtime_error(what), reason_(reason), witness_(std::move(witness)) {}

  Reason reason() const { return reason_; }
  const std::vector<ElementId>& witness() const { return witness_; }

 private:
  Reason reason_;
  std::vector<ElementId> witness_;
};

// Orthomodular poset -> unsharp residuated poset: odot is the partial meet
// and x -> y = x' v L(x, y). Throws FunctorError(not_orthomodular).
UnsharpResiduatedStructure to_urp(const BoundedInvolutivePoset& p);

// Unsharp residuated poset -> its reduct (R, <=, ', 0, 1). Requires
// idempotence, "x' <= y implies x ^ y defined" and a stored implication equal
// to x' v L(x, y); each failure has its own Reason and witness pair. The
// result is checked to be orthomodular.
BoundedInvolutivePoset to_omp(const UnsharpResiduatedStructure& s);

struct RoundTripReport {
  bool equal = true;
  // Component name and witness, e.g. "order (a, b)"; empty when equal.
  std::string first_discrepancy;
  // Observations that do not affect `equal`.
  std::vector<std::string> info;
};

// to_omp(to_urp(p)) compared with p component by component (carrier,
// order matrix, involution, bounds) on the same indexing.
RoundTripReport roundtrip_P(const BoundedInvolutivePoset& p);

// t = to_urp(to_omp(s)); requires identical implication tables and equal
// products on all pairs with x' <= y. Product differences elsewhere are info.
RoundTripReport roundtrip_R(const UnsharpResiduatedStructure& s);

}  // namespace omkit
