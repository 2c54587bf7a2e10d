#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omkit/poset.hpp"
#include "omkit/urp.hpp"

namespace omkit {

using AnyStructure = std::variant<BoundedInvolutivePoset, UnsharpResiduatedStructure>;

namespace catalog {

// Even-cardinality subsets of {1..m} under inclusion with set complement.
// Elements are indexed in increasing bitmask order and labelled as brace
// sets ("{}", "{1,2}", ...). m must be even and in [2, 6]; larger m
// overflows the 64-element carrier limit.
BoundedInvolutivePoset even_subsets(int m);

// Power set of {1..k}, 1 <= k <= 6, indexed by bitmask.
BoundedInvolutivePoset boolean_algebra(int k);

// MO_k: 0, k pairs of complementary atoms (each also a coatom), 1.
// Indices: 0 = bottom, 2i+1 / 2i+2 = i-th pair, 2k+1 = top. 1 <= k <= 31.
BoundedInvolutivePoset mo(int k);

// Six-element structure on {0, a, a', b, b', 1} with the product and
// implication tables entered literally (not derived).
UnsharpResiduatedStructure example2();

struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter signature
  std::string summary;
  int arity;           // number of integer parameters
};

std::span<const CatalogEntry> entries();

// Looks up `name` and builds it. Throws PreconditionError for an unknown
// name, wrong parameter count or out-of-range parameter.
AnyStructure build(std::string_view name, std::span<const int> params);

// All orthomodular posets used as standard fixtures, with display names.
std::vector<std::pair<std::string, BoundedInvolutivePoset>> orthomodular_fixtures();

}  // namespace catalog
}  // namespace omkit
