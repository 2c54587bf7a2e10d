#include "omkit/poset.hpp"

#include <sstream>

namespace omkit {
namespace {

std::string idx(ElementId x) { return std::to_string(x); }

void check_dimensions(const RawPoset& c) {
  const std::size_t n = c.le.size();
  if (n == 0) throw StructureError("empty carrier");
  if (n > static_cast<std::size_t>(kMaxCarrier)) {
    throw StructureError("carrier size " + std::to_string(n) +
                         " exceeds the maximum of " +
                         std::to_string(kMaxCarrier));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c.le[i].size() != n) {
      throw StructureError("order matrix row " + std::to_string(i) +
                           " has length " + std::to_string(c.le[i].size()) +
                           ", expected " + std::to_string(n));
    }
  }
  if (c.inv.size() != n) {
    throw StructureError("involution has length " +
                         std::to_string(c.inv.size()) + ", expected " +
                         std::to_string(n));
  }
  const auto in_range = [n](ElementId x) {
    return x >= 0 && static_cast<std::size_t>(x) < n;
  };
  for (ElementId x : c.inv) {
    if (!in_range(x)) throw StructureError("involution value out of range: " + idx(x));
  }
  if (!in_range(c.bot)) throw StructureError("bot out of range: " + idx(c.bot));
  if (!in_range(c.top)) throw StructureError("top out of range: " + idx(c.top));
  if (!c.labels.empty() && c.labels.size() != n) {
    throw StructureError("label count does not match carrier size");
  }
}

}  // namespace

void close_order(std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[k][j]) le[i][j] = true;
      }
    }
  }
}

BoundedInvolutivePoset::BoundedInvolutivePoset(const RawPoset& raw)
    : n_(static_cast<int>(raw.le.size())),
      bot_(raw.bot),
      top_(raw.top),
      inv_(raw.inv),
      labels_(raw.labels) {
  down_.assign(static_cast<std::size_t>(n_), Subset(n_));
  up_.assign(static_cast<std::size_t>(n_), Subset(n_));
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (raw.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        up_[static_cast<std::size_t>(a)].insert(b);
        down_[static_cast<std::size_t>(b)].insert(a);
      }
    }
  }
  if (labels_.empty()) {
    for (ElementId x = 0; x < n_; ++x) labels_.push_back(std::to_string(x));
  }
}

Subset BoundedInvolutivePoset::involute(const Subset& a) const {
  Subset out(n_);
  a.for_each([&](ElementId x) { out.insert(inv(x)); });
  return out;
}

std::optional<ElementId> BoundedInvolutivePoset::find(std::string_view label) const {
  for (ElementId x = 0; x < n_; ++x) {
    if (labels_[static_cast<std::size_t>(x)] == label) return x;
  }
  return std::nullopt;
}

RawPoset BoundedInvolutivePoset::raw() const {
  RawPoset r;
  r.le.assign(static_cast<std::size_t>(n_),
              std::vector<bool>(static_cast<std::size_t>(n_), false));
  for (ElementId a = 0; a < n_; ++a) {
    up(a).for_each([&](ElementId b) {
      r.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    });
  }
  r.inv = inv_;
  r.bot = bot_;
  r.top = top_;
  r.labels = labels_;
  return r;
}

PosetValidation validate_poset(const RawPoset& c) {
  check_dimensions(c);
  const int n = static_cast<int>(c.le.size());
  const auto le = [&](ElementId a, ElementId b) {
    return static_cast<bool>(c.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  };
  const auto inv = [&](ElementId x) { return c.inv[static_cast<std::size_t>(x)]; };

  PosetValidation out;
  ValidationReport& rep = out.report;

  LawResult& refl = rep.add(law::kReflexive);
  for (ElementId a = 0; a < n; ++a) {
    if (!le(a, a)) refl.record({{a}, "not a <= a"});
  }

  LawResult& anti = rep.add(law::kAntisymmetric);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a)) anti.record({{a, b}, "a <= b and b <= a"});
    }
  }

  LawResult& trans = rep.add(law::kTransitive);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (ElementId d = 0; d < n; ++d) {
        if (le(b, d) && !le(a, d)) trans.record({{a, b, d}, "a <= b <= c but not a <= c"});
      }
    }
  }

  LawResult& bounds = rep.add(law::kBounds);
  for (ElementId x = 0; x < n; ++x) {
    if (!le(c.bot, x)) bounds.record({{x}, "bot is not below x"});
    if (!le(x, c.top)) bounds.record({{x}, "x is not below top"});
  }

  LawResult& invol = rep.add(law::kInvolutive);
  for (ElementId x = 0; x < n; ++x) {
    if (inv(inv(x)) != x) invol.record({{x}, "x'' != x"});
  }

  LawResult& anton = rep.add(law::kAntitone);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (le(a, b) && !le(inv(b), inv(a))) anton.record({{a, b}, "a <= b but not b' <= a'"});
    }
  }

  LawResult& swap = rep.add(law::kBoundsSwap);
  if (inv(c.bot) != c.top) {
    swap.record({{c.bot, inv(c.bot), c.top}, "bot' != top"});
  }
  if (inv(c.top) != c.bot) {
    swap.record({{c.top, inv(c.top), c.bot}, "top' != bot"});
  }

  if (n == 1) rep.add_note("carrier of size 1: bot = top");

  if (rep.passed()) out.poset = BoundedInvolutivePoset(c);
  return out;
}

BoundedInvolutivePoset make_poset(const RawPoset& candidate) {
  PosetValidation v = validate_poset(candidate);
  if (v.poset) return std::move(*v.poset);
  std::vector<std::string> labels = candidate.labels;
  if (labels.empty()) {
    for (std::size_t i = 0; i < candidate.le.size(); ++i) labels.push_back(std::to_string(i));
  }
  for (const LawResult& r : v.report.laws()) {
    if (!r.holds()) {
      std::ostringstream os;
      os << "not a bounded involutive poset: " << r.name;
      if (!r.witnesses.empty()) os << ' ' << render_witness(r.witnesses.front(), labels);
      throw StructureError(os.str());
    }
  }
  throw StructureError("not a bounded involutive poset");
}

Subset lower_cone(const BoundedInvolutivePoset& p, const Subset& a) {
  Subset out = p.full();
  a.for_each([&](ElementId y) { out &= p.down(y); });
  return out;
}

Subset upper_cone(const BoundedInvolutivePoset& p, const Subset& a) {
  Subset out = p.full();
  a.for_each([&](ElementId y) { out &= p.up(y); });
  return out;
}

std::optional<ElementId> meet(const BoundedInvolutivePoset& p, ElementId a,
                              ElementId b) {
  const Subset lower = p.down(a) & p.down(b);
  std::optional<ElementId> out;
  lower.for_each([&](ElementId g) {
    if (!out && lower.is_subset_of(p.down(g))) out = g;
  });
  return out;
}

std::optional<ElementId> join(const BoundedInvolutivePoset& p, ElementId a,
                              ElementId b) {
  const Subset upper = p.up(a) & p.up(b);
  std::optional<ElementId> out;
  upper.for_each([&](ElementId l) {
    if (!out && upper.is_subset_of(p.up(l))) out = l;
  });
  return out;
}

PartialBinaryOp meet_table(const BoundedInvolutivePoset& p) {
  PartialBinaryOp t(p.size());
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) t.set(a, b, meet(p, a, b));
  }
  return t;
}

PartialBinaryOp join_table(const BoundedInvolutivePoset& p) {
  PartialBinaryOp t(p.size());
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) t.set(a, b, join(p, a, b));
  }
  return t;
}

Subset interval(const BoundedInvolutivePoset& p, ElementId a, ElementId b) {
  if (!p.le(a, b)) {
    throw PreconditionError("interval [" + p.label(a) + ", " + p.label(b) +
                            "] requires " + p.label(a) + " <= " + p.label(b));
  }
  return p.up(a) & p.down(b);
}

Subset lift_join(const BoundedInvolutivePoset& p, const Subset& a, ElementId x) {
  Subset out = p.none();
  a.for_each([&](ElementId y) {
    const auto j = join(p, y, x);
    if (!j) {
      throw PartialityError(p.label(y) + " v " + p.label(x) + " is undefined", {y, x});
    }
    out.insert(*j);
  });
  return out;
}

Subset lift_meet(const BoundedInvolutivePoset& p, const Subset& a, ElementId x) {
  Subset out = p.none();
  a.for_each([&](ElementId y) {
    const auto m = meet(p, y, x);
    if (!m) {
      throw PartialityError(p.label(y) + " ^ " + p.label(x) + " is undefined", {y, x});
    }
    out.insert(*m);
  });
  return out;
}

bool orthogonal_to(const BoundedInvolutivePoset& p, const Subset& a, ElementId x) {
  return a.is_subset_of(p.down(p.inv(x)));
}

bool set_le(const BoundedInvolutivePoset& p, const Subset& a, const Subset& b) {
  bool ok = true;
  a.for_each([&](ElementId x) {
    if (!b.is_subset_of(p.up(x))) ok = false;
  });
  return ok;
}

std::vector<std::pair<ElementId, ElementId>> covering_pairs(const BoundedInvolutivePoset& p) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a = 0; a < p.size(); ++a) {
    Subset above = p.up(a);
    above.erase(a);
    above.for_each([&](ElementId b) {
      Subset between = above & p.down(b);
      between.erase(b);
      if (between.empty()) out.emplace_back(a, b);
    });
  }
  return out;
}

BoundedInvolutivePoset relabel(const BoundedInvolutivePoset& p,
                               std::span<const ElementId> perm) {
  const int n = p.size();
  if (static_cast<int>(perm.size()) != n) throw StructureError("permutation has wrong length");
  RawPoset r;
  r.le.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  r.inv.assign(static_cast<std::size_t>(n), 0);
  r.labels.assign(static_cast<std::size_t>(n), std::string());
  const auto at = [&](ElementId x) { return perm[static_cast<std::size_t>(x)]; };
  for (ElementId a = 0; a < n; ++a) {
    p.up(a).for_each([&](ElementId b) {
      r.le[static_cast<std::size_t>(at(a))][static_cast<std::size_t>(at(b))] = true;
    });
    r.inv[static_cast<std::size_t>(at(a))] = at(p.inv(a));
    r.labels[static_cast<std::size_t>(at(a))] = p.label(a);
  }
  r.bot = at(p.bot());
  r.top = at(p.top());
  return make_poset(r);
}

}  // namespace omkit
