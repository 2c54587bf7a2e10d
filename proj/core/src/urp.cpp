#include "omkit/urp.hpp"

#include <algorithm>
#include <iterator>

namespace omkit {
namespace {

struct AdjointnessSides {
  bool defined = true;
  bool lhs = false;
  bool rhs = false;
};

// U(x, y') odot y, or nullopt if some product is undefined.
std::optional<Subset> lifted_product(const UnsharpResiduatedStructure& s,
                                     const Subset& cone, ElementId y) {
  Subset image = s.poset().none();
  bool ok = true;
  cone.for_each([&](ElementId u) {
    const auto v = s.odot().at(u, y);
    if (v) {
      image.insert(*v);
    } else {
      ok = false;
    }
  });
  if (!ok) return std::nullopt;
  return image;
}

// Inclusion form, built from the cone operators.
AdjointnessSides eval_r3(const UnsharpResiduatedStructure& s, ElementId x,
                         ElementId y, ElementId z) {
  const BoundedInvolutivePoset& p = s.poset();
  const Subset cone = upper_cone(p, p.pair(x, p.inv(y)));
  AdjointnessSides out;
  const auto image = lifted_product(s, cone, y);
  if (!image) {
    out.defined = false;
    return out;
  }
  out.lhs = image->is_subset_of(upper_cone(p, lower_cone(p, p.pair(y, z))));
  out.rhs = cone.is_subset_of(upper_cone(p, s.imp().at(y, z)));
  return out;
}

// Order form, evaluated by direct pairwise comparison.
AdjointnessSides eval_r3_dual(const UnsharpResiduatedStructure& s, ElementId x,
                              ElementId y, ElementId z) {
  const BoundedInvolutivePoset& p = s.poset();
  const int n = p.size();
  std::vector<ElementId> cone;
  for (ElementId u = 0; u < n; ++u) {
    if (p.le(x, u) && p.le(p.inv(y), u)) cone.push_back(u);
  }
  std::vector<ElementId> image;
  for (ElementId u : cone) {
    const auto v = s.odot().at(u, y);
    if (!v) return {false, false, false};
    image.push_back(*v);
  }
  std::vector<ElementId> lower;
  for (ElementId t = 0; t < n; ++t) {
    if (p.le(t, y) && p.le(t, z)) lower.push_back(t);
  }
  const auto ge = [&](const std::vector<ElementId>& big, const std::vector<ElementId>& small) {
    for (ElementId a : big) {
      for (ElementId b : small) {
        if (!p.le(b, a)) return false;
      }
    }
    return true;
  };
  const std::vector<ElementId> imp = s.imp().at(y, z).elements();
  return {true, ge(image, lower), ge(cone, imp)};
}

template <typename Eval>
std::vector<Triple> failing_triples(const UnsharpResiduatedStructure& s, Eval eval) {
  std::vector<Triple> out;
  const int n = s.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        const AdjointnessSides r = eval(s, x, y, z);
        if (r.defined && r.lhs != r.rhs) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

Witness triple_witness(const Triple& t, std::string detail) {
  return {{t[0], t[1], t[2]}, std::move(detail)};
}

}  // namespace

UnsharpResiduatedStructure::UnsharpResiduatedStructure(BoundedInvolutivePoset poset,
                                                       PartialBinaryOp odot,
                                                       SetValuedBinaryOp imp)
    : poset_(std::move(poset)), odot_(std::move(odot)), imp_(std::move(imp)) {
  const int n = poset_.size();
  if (odot_.size() != n) throw StructureError("product table has wrong dimension");
  if (imp_.size() != n) throw StructureError("implication table has wrong dimension");
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const auto v = odot_.at(a, b);
      if (v && (*v < 0 || *v >= n)) throw StructureError("product value out of range");
      if (imp_.at(a, b).width() != n) throw StructureError("implication entry has wrong width");
    }
  }
}

ValidationReport check_partial_monoid(const UnsharpResiduatedStructure& s,
                                      std::size_t cap) {
  ValidationReport rep;
  LawResult& assoc = rep.add(law::kMonoidAssociativity);
  LawResult& unit = rep.add(law::kMonoidUnit);
  LawResult& comm = rep.add(law::kMonoidCommutativity);
  const PartialBinaryOp& op = s.odot();
  const ElementId one = s.poset().top();
  const int n = s.size();

  for (ElementId x = 0; x < n; ++x) {
    if (op.at(x, one) != x) unit.record({{x}, "x odot 1 != x"}, cap);
    if (op.at(one, x) != x) unit.record({{x}, "1 odot x != x"}, cap);
    for (ElementId y = 0; y < n; ++y) {
      if (y > x) {
        if (op.at(x, y) != op.at(y, x)) {
          comm.record({{x, y}, op.defined(x, y) == op.defined(y, x)
                                   ? "x odot y != y odot x"
                                   : "x odot y defined on one side only"},
                      cap);
        }
      }
      const auto xy = op.at(x, y);
      for (ElementId z = 0; z < n; ++z) {
        const auto yz = op.at(y, z);
        if (!xy || !yz) continue;
        const auto left = op.at(*xy, z);
        const auto right = op.at(x, *yz);
        if (left && right && *left != *right) {
          assoc.record({{x, y, z}, "(x odot y) odot z != x odot (y odot z)"}, cap);
        }
      }
    }
  }
  return rep;
}

ValidationReport check_R2(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& defined = rep.add(law::kR2Definedness);
  LawResult& mono = rep.add(law::kR2Monotonicity);
  LawResult& prop = rep.add(law::kR2Propagation, Severity::info);
  const BoundedInvolutivePoset& p = s.poset();
  const PartialBinaryOp& op = s.odot();
  const int n = s.size();

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (p.le(p.inv(x), y) && !op.defined(x, y)) {
        defined.record({{x, y}, "x' <= y but x odot y is undefined"}, cap);
      }
      if (!p.le(x, y)) continue;
      for (ElementId z = 0; z < n; ++z) {
        const auto xz = op.at(x, z);
        const auto yz = op.at(y, z);
        if (xz && yz && !p.le(*xz, *yz)) {
          mono.record({{x, y, z}, "x <= y but x odot z > y odot z"}, cap);
        }
        if (xz && !yz) {
          prop.record({{x, y, z}, "x <= y, x odot z defined, y odot z undefined"}, cap);
        }
      }
    }
  }
  return rep;
}

std::vector<Triple> r3_failing_triples(const UnsharpResiduatedStructure& s) {
  return failing_triples(s, eval_r3);
}

std::vector<Triple> r3_dual_failing_triples(const UnsharpResiduatedStructure& s) {
  return failing_triples(s, eval_r3_dual);
}

ValidationReport check_R3(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& fwd = rep.add(law::kR3Forward);
  LawResult& bwd = rep.add(law::kR3Backward);
  LawResult& undef = rep.add(law::kR3Undefined, Severity::info);
  fwd.note = "U(x,y') odot y <= UL(y,z) implies U(x,y') <= U(y -> z)";
  bwd.note = "U(x,y') <= U(y -> z) implies U(x,y') odot y <= UL(y,z)";
  const int n = s.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        const AdjointnessSides r = eval_r3(s, x, y, z);
        if (!r.defined) {
          undef.record({{x, y, z}, "some u odot y undefined (see R2-definedness)"}, cap);
        } else if (r.lhs && !r.rhs) {
          fwd.record(triple_witness({x, y, z}, "left side holds, right side fails"), cap);
        } else if (r.rhs && !r.lhs) {
          bwd.record(triple_witness({x, y, z}, "right side holds, left side fails"), cap);
        }
      }
    }
  }
  return rep;
}

ValidationReport check_R3_dual(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& dual = rep.add(law::kR3Prime);
  LawResult& agree = rep.add(law::kR3Agreement);
  dual.note = "U(x,y') odot y >= L(y,z) iff U(x,y') >= y -> z";
  const std::vector<Triple> primal = r3_failing_triples(s);
  const std::vector<Triple> dual_fail = r3_dual_failing_triples(s);
  for (const Triple& t : dual_fail) dual.record(triple_witness(t, "sides disagree"), cap);

  std::vector<Triple> diff;
  std::set_symmetric_difference(primal.begin(), primal.end(), dual_fail.begin(),
                                dual_fail.end(), std::back_inserter(diff));
  for (const Triple& t : diff) {
    agree.record(triple_witness(t, "fails under exactly one formulation"), cap);
  }
  return rep;
}

ValidationReport check_R4(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& r4 = rep.add(law::kR4);
  r4.note = "x <= y implies U(x' -> y) = U(y)";
  const BoundedInvolutivePoset& p = s.poset();
  const int n = s.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      if (upper_cone(p, s.imp().at(p.inv(x), y)) != p.up(y)) {
        r4.record({{x, y}, "U(x' -> y) != U(y)"}, cap);
      }
    }
  }
  return rep;
}

ValidationReport check_divisible(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& div = rep.add(law::kDivisible);
  const BoundedInvolutivePoset& p = s.poset();
  const int n = s.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const auto image = lifted_product(s, s.imp().at(x, y), x);
      if (!image) {
        div.record({{x, y}, "x odot t undefined for some t in x -> y"}, cap);
      } else if (*image != lower_cone(p, p.pair(x, y))) {
        div.record({{x, y}, "x odot (x -> y) != L(x, y)"}, cap);
      }
    }
  }
  return rep;
}

ValidationReport check_idempotent(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  LawResult& idem = rep.add(law::kIdempotent);
  for (ElementId x = 0; x < s.size(); ++x) {
    if (s.odot().at(x, x) != x) idem.record({{x}, "x odot x != x"}, cap);
  }
  return rep;
}

ValidationReport check_product_is_meet(const UnsharpResiduatedStructure& s, std::size_t cap) {
  if (!check_idempotent(s, 0).passed()) {
    throw PreconditionError("product-is-meet check requires an idempotent structure");
  }
  ValidationReport rep;
  LawResult& lem = rep.add(law::kProductIsMeet);
  lem.note = "a odot b = a ^ b where both are defined";
  const BoundedInvolutivePoset& p = s.poset();
  for (ElementId a = 0; a < s.size(); ++a) {
    for (ElementId b = 0; b < s.size(); ++b) {
      const auto prod = s.odot().at(a, b);
      const auto m = meet(p, a, b);
      if (prod && m && *prod != *m) lem.record({{a, b}, "a odot b != a ^ b"}, cap);
    }
  }
  return rep;
}

ValidationReport check_zero_absorbing(const UnsharpResiduatedStructure& s,
                                      std::size_t cap) {
  ValidationReport rep;
  LawResult& zero = rep.add(law::kZeroAbsorbing);
  const ElementId bot = s.poset().bot();
  for (ElementId x = 0; x < s.size(); ++x) {
    if (s.odot().at(x, bot) != bot || s.odot().at(bot, x) != bot) {
      zero.record({{x}, "x odot 0 != 0"}, cap);
    }
  }
  return rep;
}

ValidationReport validate_urp(const UnsharpResiduatedStructure& s, std::size_t cap) {
  ValidationReport rep;
  const PosetValidation r1 = validate_poset(s.poset().raw());
  LawResult& r1_law = rep.add(law::kR1);
  for (const LawResult& r : r1.report.laws()) {
    for (const Witness& w : r.witnesses) r1_law.record({w.elements, r.name + ": " + w.detail}, cap);
  }

  rep.merge(check_partial_monoid(s, cap));
  rep.merge(check_R2(s, cap));
  rep.merge(check_R3(s, cap));
  rep.merge(check_R3_dual(s, cap));
  rep.merge(check_R4(s, cap));

  const auto as = [](ValidationReport r, Severity sev) {
    ValidationReport out;
    for (const LawResult& l : r.laws()) {
      LawResult& copy = out.add(l.name, sev);
      copy = l;
      copy.severity = sev;
    }
    return out;
  };
  const ValidationReport idem = check_idempotent(s, cap);
  rep.merge(as(check_divisible(s, cap), Severity::property));
  rep.merge(as(idem, Severity::property));
  if (idem.passed()) {
    rep.merge(check_product_is_meet(s, cap));
  } else {
    LawResult& lem = rep.add(law::kProductIsMeet);
    lem.skipped = true;
    lem.note = "requires idempotence";
  }
  rep.merge(as(check_zero_absorbing(s, cap), Severity::info));
  return rep;
}

bool is_divisible_idempotent_urp(const ValidationReport& report) {
  return report.passed() && report.holds(law::kDivisible) &&
         report.holds(law::kIdempotent);
}

}  // namespace omkit
