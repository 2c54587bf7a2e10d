#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omkit/poset.hpp"

namespace omkit {

enum class SearchClass { involutive_poset, orthomodular_poset };

inline constexpr int kMinSearchSize = 2;
inline constexpr int kMaxSearchSize = 8;
inline constexpr int kMaxCanonicalSize = 10;

struct SearchSpec {
  int size = 2;
  SearchClass cls = SearchClass::orthomodular_poset;
  // Keep one representative per isomorphism class.
  bool canonical = true;
};

// Order matrix and involution after relabelling to the lexicographically
// least encoding among all labellings that put bot first and top last.
// Equal iff the structures are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws PreconditionError if p has more than kMaxCanonicalSize elements.
CanonicalForm canonical_form(const BoundedInvolutivePoset& p);

using SearchSink = std::function<void(const BoundedInvolutivePoset&)>;

// Enumerates every structure of the requested class on `size` elements,
// with element 0 = bot and element size-1 = top. Orders are generated by
// inserting one element at a time with a down-closed set below it and an
// up-closed set above it, so every labelled order is produced once;
// involutions are bot/top-swapping matchings filtered for antitonicity.
// Calls `sink` (if set) for each emitted structure and returns the count.
// Deterministic. Throws PreconditionError for sizes outside [2, 8].
std::size_t enumerate(const SearchSpec& spec, const SearchSink& sink = {});

struct StressSummary {
  std::size_t tested = 0;
  std::size_t failures = 0;
};

// Thrown by stress_constructions; what() includes the offending structure in
// structure-file form.
class StressFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// For every enumerated orthomodular poset: to_urp passes validate_urp and is
// divisible, idempotent and zero-absorbing; the cone decomposition and
// implication-property checks pass; and to_omp(to_urp(P)) is identical to P.
// Work is split over `jobs` threads; the result does not depend on `jobs`.
StressSummary stress_constructions(const SearchSpec& spec, int jobs = 1);

}  // namespace omkit
