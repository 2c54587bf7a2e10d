#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "omkit/subset.hpp"

namespace omkit {

// Malformed input: wrong dimensions, out-of-range indices, oversized carrier.
// Distinct from a law violation, which is reported, not thrown.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A partial operation needed by an elementwise lift was undefined.
class PartialityError : public std::runtime_error {
 public:
  PartialityError(const std::string& what, std::vector<ElementId> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<ElementId>& witness() const { return witness_; }

 private:
  std::vector<ElementId> witness_;
};

}  // namespace omkit
