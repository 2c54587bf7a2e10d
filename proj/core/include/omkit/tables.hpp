#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omkit/subset.hpp"

namespace omkit {

// n x n table of a partial binary operation; an empty optional marks an
// undefined entry. Houses order meet/join and the product of a residuated
// structure.
class PartialBinaryOp {
 public:
  PartialBinaryOp() = default;
  explicit PartialBinaryOp(int n)
      : n_(n), table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int size() const { return n_; }

  std::optional<ElementId> at(ElementId a, ElementId b) const {
    return table_[index(a, b)];
  }
  bool defined(ElementId a, ElementId b) const {
    return table_[index(a, b)].has_value();
  }
  void set(ElementId a, ElementId b, std::optional<ElementId> v) {
    table_[index(a, b)] = v;
  }

  friend bool operator==(const PartialBinaryOp&,
                         const PartialBinaryOp&) = default;

 private:
  std::size_t index(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<std::optional<ElementId>> table_;
};

// n x n table of subsets; houses the unsharp implication.
class SetValuedBinaryOp {
 public:
  SetValuedBinaryOp() = default;
  explicit SetValuedBinaryOp(int n)
      : n_(n),
        table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               Subset(n)) {}

  int size() const { return n_; }

  const Subset& at(ElementId a, ElementId b) const {
    return table_[index(a, b)];
  }
  void set(ElementId a, ElementId b, const Subset& s) {
    table_[index(a, b)] = s;
  }

  friend bool operator==(const SetValuedBinaryOp&,
                         const SetValuedBinaryOp&) = default;

 private:
  std::size_t index(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<Subset> table_;
};

}  // namespace omkit
