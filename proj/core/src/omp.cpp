#include "omkit/omp.hpp"


namespace omkit {

ValidationReport check_orthomodular(const BoundedInvolutivePoset& p,
                                    std::size_t cap) {
  ValidationReport rep;
  LawResult& ortho = rep.add(law::kOrthogonalJoins);
  LawResult& meet_def = rep.add(law::kOrthomodularMeetDefined);
  LawResult& join_def = rep.add(law::kOrthomodularJoinDefined);
  LawResult& om_law = rep.add(law::kOrthomodularLaw);
  LawResult& compl_ = rep.add(law::kComplementation);
  const int n = p.size();

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (p.le(x, p.inv(y)) && !join(p, x, y)) {
        ortho.record({{x, y}, "x <= y' but x v y is undefined"}, cap);
      }
      if (!p.le(x, y)) continue;
      const auto m = meet(p, y, p.inv(x));
      if (!m) {
        meet_def.record({{x, y}, "x <= y but y ^ x' is undefined"}, cap);
        continue;
      }
      const auto j = join(p, x, *m);
      if (!j) {
        join_def.record({{x, y, *m}, "x <= y but x v (y ^ x') is undefined"}, cap);
        continue;
      }
      if (*j != y) {
        om_law.record({{x, y, *j}, "x <= y but x v (y ^ x') != y"}, cap);
      }
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    if (join(p, x, p.inv(x)) != p.top()) {
      compl_.record({{x}, "x v x' != 1"}, cap);
    }
    if (meet(p, x, p.inv(x)) != p.bot()) {
      compl_.record({{x}, "x ^ x' != 0"}, cap);
    }
  }
  return rep;
}

bool is_orthomodular(const BoundedInvolutivePoset& p) {
  return check_orthomodular(p, 0).passed();
}

Subset implication(const BoundedInvolutivePoset& p, ElementId x, ElementId y) {
  return lift_join(p, lower_cone(p, p.pair(x, y)), p.inv(x));
}

SetValuedBinaryOp implication_table(const BoundedInvolutivePoset& p) {
  SetValuedBinaryOp t(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y = 0; y < p.size(); ++y) t.set(x, y, implication(p, x, y));
  }
  return t;
}

ValidationReport check_cone_decomposition(const BoundedInvolutivePoset& p, std::size_t cap) {
  ValidationReport rep;
  LawResult& upper = rep.add(law::kConeDecompositionUpper);
  LawResult& lower = rep.add(law::kConeDecompositionLower);
  const int n = p.size();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const Subset u = upper_cone(p, p.pair(a, b));
      try {
        if (lift_join(p, lift_meet(p, u, p.inv(a)), a) != u) {
          upper.record({{a, b}, "U(a,b) != a v (U(a,b) ^ a')"}, cap);
        }
      } catch (const PartialityError& e) {
        upper.record({{a, b}, e.what()}, cap);
      }
      const Subset l = lower_cone(p, p.pair(a, b));
      try {
        if (lift_meet(p, lift_join(p, l, p.inv(b)), b) != l) {
          lower.record({{a, b}, "L(a,b) != b ^ (L(a,b) v b')"}, cap);
        }
      } catch (const PartialityError& e) {
        lower.record({{a, b}, e.what()}, cap);
      }
    }
  }
  return rep;
}

ValidationReport check_implication_properties(const BoundedInvolutivePoset& p,
                                              std::size_t cap) {
  ValidationReport rep;
  LawResult& i1 = rep.add(law::kImplicationI);
  LawResult& i2 = rep.add(law::kImplicationII);
  LawResult& i3 = rep.add(law::kImplicationIII);
  LawResult& i4 = rep.add(law::kImplicationIV);
  LawResult& i5 = rep.add(law::kImplicationV);
  i1.note = "x -> 0 = {x'}";
  i2.note = "1 -> x = L(x)";
  i3.note = "x <= y implies x -> y = [x', 1]";
  i4.note = "x <= y implies U(x -> y) = {1}";
  i5.note = "x -> x' = {x'}";

  // Evaluates x -> y, recording a partiality failure against `item`.
  const auto imp = [&](LawResult& item, ElementId x, ElementId y) -> std::optional<Subset> {
    try {
      return implication(p, x, y);
    } catch (const PartialityError& e) {
      item.record({{x, y}, e.what()}, cap);
      return std::nullopt;
    }
  };

  const int n = p.size();
  const Subset top_only = p.singleton(p.top());
  for (ElementId x = 0; x < n; ++x) {
    const Subset xc = p.singleton(p.inv(x));
    if (auto r = imp(i1, x, p.bot()); r && *r != xc) {
      i1.record({{x}, "x -> 0 != {x'}"}, cap);
    }
    if (auto r = imp(i2, p.top(), x); r && *r != p.down(x)) {
      i2.record({{x}, "1 -> x != L(x)"}, cap);
    }
    if (auto r = imp(i5, x, p.inv(x)); r && *r != xc) {
      i5.record({{x}, "x -> x' != {x'}"}, cap);
    }
    for (ElementId y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      if (auto r = imp(i3, x, y); r && *r != interval(p, p.inv(x), p.top())) {
        i3.record({{x, y}, "x -> y != [x', 1]"}, cap);
      }
      if (auto r = imp(i4, x, y); r && upper_cone(p, *r) != top_only) {
        i4.record({{x, y}, "U(x -> y) != {1}"}, cap);
      }
    }
  }
  return rep;
}

}  // namespace omkit
