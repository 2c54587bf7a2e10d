#pragma once

#include <string>

#include "omkit/omkit.hpp"

namespace fixtures {

// Element indices of catalog::example2().
enum : omkit::ElementId { kZero = 0, kA = 1, kAc = 2, kB = 3, kBc = 4, kOne = 5 };

inline omkit::UnsharpResiduatedStructure with_imp(const omkit::UnsharpResiduatedStructure& s,
                                                  omkit::ElementId x, omkit::ElementId y,
                                                  std::initializer_list<omkit::ElementId> value) {
  omkit::SetValuedBinaryOp imp = s.imp();
  imp.set(x, y, omkit::Subset::of(s.size(), value));
  return {s.poset(), s.odot(), imp};
}

inline omkit::UnsharpResiduatedStructure with_odot(const omkit::UnsharpResiduatedStructure& s,
                                                   omkit::ElementId x, omkit::ElementId y,
                                                   std::optional<omkit::ElementId> value,
                                                   bool symmetric) {
  omkit::PartialBinaryOp odot = s.odot();
  odot.set(x, y, value);
  if (symmetric) odot.set(y, x, value);
  return {s.poset(), odot, s.imp()};
}

// a -> a changed from {a', 1} to {a'}.
inline omkit::UnsharpResiduatedStructure example2_imp_tampered() {
  return with_imp(omkit::catalog::example2(), kA, kA, {kAc});
}

// 0 < a < b' < 1, 0 < b < a' < 1: an ortholattice that is not orthomodular.
inline omkit::BoundedInvolutivePoset hexagon() {
  omkit::RawPoset r;
  r.labels = {"0", "a", "b", "a'", "b'", "1"};
  r.le.assign(6, std::vector<bool>(6, false));
  const auto rel = [&](int a, int b) { r.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true; };
  rel(0, 1);
  rel(1, 4);
  rel(4, 5);
  rel(0, 2);
  rel(2, 3);
  rel(3, 5);
  omkit::close_order(r.le);
  r.inv = {5, 3, 4, 1, 2, 0};
  r.bot = 0;
  r.top = 5;
  return omkit::make_poset(r);
}

// Structure with the hexagon's order and an implication computed from
// x' v L(x, y); the product is the partial meet.
inline omkit::UnsharpResiduatedStructure hexagon_urp() {
  const omkit::BoundedInvolutivePoset p = hexagon();
  return {p, omkit::meet_table(p), omkit::implication_table(p)};
}

inline std::string data_path(const std::string& name) {
  return std::string(OMKIT_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
