#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omkit/errors.hpp"
#include "omkit/report.hpp"
#include "omkit/subset.hpp"
#include "omkit/tables.hpp"

namespace omkit {

// Unvalidated candidate for a bounded poset with antitone involution.
// `le[a][b]` means a <= b; `inv[x]` is x'.
struct RawPoset {
  std::vector<std::vector<bool>> le;
  std::vector<ElementId> inv;
  ElementId bot = 0;
  ElementId top = 0;
  // Optional; defaults to "0".."n-1" when empty.
  std::vector<std::string> labels;
};

// Replaces `le` by its reflexive-transitive closure (Warshall).
void close_order(std::vector<std::vector<bool>>& le);

struct PosetValidation;

namespace law {
inline constexpr const char* kReflexive = "reflexive";
inline constexpr const char* kAntisymmetric = "antisymmetric";
inline constexpr const char* kTransitive = "transitive";
inline constexpr const char* kBounds = "bounds";
inline constexpr const char* kInvolutive = "involutive";
inline constexpr const char* kAntitone = "antitone";
inline constexpr const char* kBoundsSwap = "complementation-bounds";
}  // namespace law

// (P, <=, ', 0, 1). Immutable once built; only obtainable through
// validate_poset / make_poset, so every instance satisfies the invariants.
class BoundedInvolutivePoset {
 public:
  int size() const { return n_; }
  ElementId bot() const { return bot_; }
  ElementId top() const { return top_; }
  ElementId inv(ElementId x) const { return inv_[static_cast<std::size_t>(x)]; }

  bool le(ElementId a, ElementId b) const { return up(a).contains(b); }
  bool lt(ElementId a, ElementId b) const { return a != b && le(a, b); }

  // {y | y <= x} and {y | x <= y}.
  const Subset& down(ElementId x) const { return down_[static_cast<std::size_t>(x)]; }
  const Subset& up(ElementId x) const { return up_[static_cast<std::size_t>(x)]; }

  Subset full() const { return Subset::full(n_); }
  Subset none() const { return Subset(n_); }
  Subset singleton(ElementId x) const { return Subset::of(n_, {x}); }
  Subset pair(ElementId a, ElementId b) const { return Subset::of(n_, {a, b}); }

  // A' = {x' | x in A}.
  Subset involute(const Subset& a) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId x) const { return labels_[static_cast<std::size_t>(x)]; }
  std::optional<ElementId> find(std::string_view label) const;

  const std::vector<ElementId>& involution() const { return inv_; }
  RawPoset raw() const;

  friend bool operator==(const BoundedInvolutivePoset&,
                         const BoundedInvolutivePoset&) = default;

 private:
  friend PosetValidation validate_poset(const RawPoset&);
  explicit BoundedInvolutivePoset(const RawPoset& raw);

  int n_ = 0;
  ElementId bot_ = 0;
  ElementId top_ = 0;
  std::vector<ElementId> inv_;
  std::vector<Subset> down_;
  std::vector<Subset> up_;
  std::vector<std::string> labels_;
};

struct PosetValidation {
  ValidationReport report;
  // Present iff the report passed.
  std::optional<BoundedInvolutivePoset> poset;
};

// Checks reflexivity, antisymmetry, transitivity, bounds, involutivity,
// antitonicity and bot' = top. Throws StructureError on dimension or range
// problems. A one-element carrier is accepted with a note.
PosetValidation validate_poset(const RawPoset& candidate);

// validate_poset, throwing StructureError with the first witness on failure.
BoundedInvolutivePoset make_poset(const RawPoset& candidate);

// L(A): common lower bounds; L(empty) is the whole carrier.
Subset lower_cone(const BoundedInvolutivePoset& p, const Subset& a);
// U(A): common upper bounds; U(empty) is the whole carrier.
Subset upper_cone(const BoundedInvolutivePoset& p, const Subset& a);

// Greatest element of L(a, b), if any.
std::optional<ElementId> meet(const BoundedInvolutivePoset& p, ElementId a,
                              ElementId b);
// Least element of U(a, b), if any.
std::optional<ElementId> join(const BoundedInvolutivePoset& p, ElementId a,
                              ElementId b);

PartialBinaryOp meet_table(const BoundedInvolutivePoset& p);
PartialBinaryOp join_table(const BoundedInvolutivePoset& p);

// [a, b]. Throws PreconditionError unless a <= b.
Subset interval(const BoundedInvolutivePoset& p, ElementId a, ElementId b);

// A v a = {x v a | x in A}. Throws PartialityError naming the first x whose
// join with a is undefined.
Subset lift_join(const BoundedInvolutivePoset& p, const Subset& a, ElementId x);
// A ^ a = {y ^ a | y in A}, dual of lift_join.
Subset lift_meet(const BoundedInvolutivePoset& p, const Subset& a, ElementId x);

// True iff every member of A lies below a' (the orthogonal case of A v a).
bool orthogonal_to(const BoundedInvolutivePoset& p, const Subset& a, ElementId x);

// A <= B: x <= y for all x in A, y in B. Vacuous if either side is empty.
bool set_le(const BoundedInvolutivePoset& p, const Subset& a, const Subset& b);

// Covering relation a < b with nothing strictly between, sorted by (a, b).
std::vector<std::pair<ElementId, ElementId>> covering_pairs(const BoundedInvolutivePoset& p);

// Image of p under the bijection old index i -> new index perm[i].
BoundedInvolutivePoset relabel(const BoundedInvolutivePoset& p,
                               std::span<const ElementId> perm);

}  // namespace omkit
