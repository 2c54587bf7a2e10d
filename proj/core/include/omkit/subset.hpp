#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace omkit {

// Index of an element in the carrier of its owning structure.
using ElementId = int;

// Carriers are capped so that a subset fits a single machine word.
inline constexpr int kMaxCarrier = 64;

// A subset of a finite carrier {0, ..., width-1}, stored as one 64-bit word.
// Bits at positions >= width are always zero.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int width) : width_(width) {}

  static Subset full(int width) { return Subset(width, mask(width)); }
  static Subset from_bits(int width, std::uint64_t bits) {
    return Subset(width, bits & mask(width));
  }
  static Subset of(int width, std::initializer_list<ElementId> elements) {
    Subset s(width);
    for (ElementId e : elements) s.insert(e);
    return s;
  }

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(ElementId e) const { return (bits_ >> e) & 1u; }
  void insert(ElementId e) { bits_ |= std::uint64_t{1} << e; }
  void erase(ElementId e) { bits_ &= ~(std::uint64_t{1} << e); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool is_subset_of(const Subset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Smallest member; undefined on the empty set.
  ElementId first() const { return std::countr_zero(bits_); }

  Subset complement() const { return Subset(width_, ~bits_ & mask(width_)); }

  Subset& operator&=(const Subset& o) {
    bits_ &= o.bits_;
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    bits_ |= o.bits_;
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<ElementId>(std::countr_zero(rest)));
    }
  }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](ElementId e) { out.push_back(e); });
    return out;
  }

 private:
  Subset(int width, std::uint64_t bits) : bits_(bits), width_(width) {}

  static constexpr std::uint64_t mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  std::uint64_t bits_ = 0;
  int width_ = 0;
};

}  // namespace omkit
