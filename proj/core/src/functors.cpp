#include "omkit/functors.hpp"

#include "omkit/omp.hpp"

namespace omkit {
namespace {

std::string pair_text(const BoundedInvolutivePoset& p, ElementId a, ElementId b) {
  return "(" + p.label(a) + ", " + p.label(b) + ")";
}

std::string set_text(const BoundedInvolutivePoset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    if (!first) out += ", ";
    out += p.label(x);
    first = false;
  });
  return out + "}";
}

std::string first_failure(const ValidationReport& rep,
                          const std::vector<std::string>& labels) {
  for (const LawResult& r : rep.laws()) {
    if (r.severity == Severity::law && r.violations > 0) {
      std::string out = r.name;
      if (!r.witnesses.empty()) out += " " + render_witness(r.witnesses.front(), labels);
      return out;
    }
  }
  return "unknown";
}

}  // namespace

UnsharpResiduatedStructure to_urp(const BoundedInvolutivePoset& p) {
  const ValidationReport om = check_orthomodular(p, 1);
  if (!om.passed()) {
    std::vector<ElementId> witness;
    for (const LawResult& r : om.laws()) {
      if (!r.witnesses.empty()) {
        witness = r.witnesses.front().elements;
        break;
      }
    }
    throw FunctorError(FunctorError::Reason::not_orthomodular,
                       "not an orthomodular poset: " + first_failure(om, p.labels()),
                       witness);
  }
  return UnsharpResiduatedStructure(p, meet_table(p), implication_table(p));
}

BoundedInvolutivePoset to_omp(const UnsharpResiduatedStructure& s) {
  const BoundedInvolutivePoset& p = s.poset();
  const int n = s.size();

  for (ElementId x = 0; x < n; ++x) {
    if (s.odot().at(x, x) != x) {
      throw FunctorError(FunctorError::Reason::not_idempotent,
                         "not idempotent: " + p.label(x) + " odot " + p.label(x) +
                             " != " + p.label(x),
                         {x});
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (p.le(p.inv(x), y) && !meet(p, x, y)) {
        throw FunctorError(FunctorError::Reason::meet_hypothesis,
                           "x' <= y but x ^ y is undefined at " + pair_text(p, x, y),
                           {x, y});
      }
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const Subset& stored = s.imp().at(x, y);
      std::string expected;
      try {
        const Subset formula = implication(p, x, y);
        if (formula == stored) continue;
        expected = set_text(p, formula);
      } catch (const PartialityError& e) {
        expected = std::string("undefined (") + e.what() + ")";
      }
      throw FunctorError(FunctorError::Reason::implication_hypothesis,
                         "x -> y != x' v L(x, y) at " + pair_text(p, x, y) +
                             ": stored " + set_text(p, stored) + ", formula " + expected,
                         {x, y});
    }
  }

  const ValidationReport rep = validate_urp(s, 1);
  if (!rep.passed()) {
    throw FunctorError(FunctorError::Reason::not_urp,
                       "not an unsharp residuated poset: " + first_failure(rep, p.labels()),
                       {});
  }

  const ValidationReport om = check_orthomodular(p, 1);
  if (!om.passed()) {
    throw FunctorError(FunctorError::Reason::not_orthomodular,
                       "reduct is not orthomodular: " + first_failure(om, p.labels()), {});
  }
  return p;
}

RoundTripReport roundtrip_P(const BoundedInvolutivePoset& p) {
  const BoundedInvolutivePoset q = to_omp(to_urp(p));
  RoundTripReport out;
  const auto differ = [&](std::string what) {
    if (out.equal) {
      out.equal = false;
      out.first_discrepancy = std::move(what);
    }
  };
  if (q.size() != p.size()) {
    differ("carrier size " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
    return out;
  }
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) {
      if (p.le(a, b) != q.le(a, b)) differ("order " + pair_text(p, a, b));
    }
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.inv(x) != q.inv(x)) differ("involution (" + p.label(x) + ")");
  }
  if (p.bot() != q.bot()) differ("bot");
  if (p.top() != q.top()) differ("top");
  return out;
}

RoundTripReport roundtrip_R(const UnsharpResiduatedStructure& s) {
  const UnsharpResiduatedStructure t = to_urp(to_omp(s));
  const BoundedInvolutivePoset& p = s.poset();
  RoundTripReport out;
  const int n = s.size();
  for (ElementId x = 0; x < n && out.equal; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (s.imp().at(x, y) != t.imp().at(x, y)) {
        out.equal = false;
        out.first_discrepancy = "imp " + pair_text(p, x, y);
        break;
      }
    }
  }
  std::size_t outside = 0;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const auto original = s.odot().at(x, y);
      const auto derived = t.odot().at(x, y);
      if (original == derived) continue;
      if (p.le(p.inv(x), y)) {
        if (out.equal) {
          out.equal = false;
          out.first_discrepancy = "odot " + pair_text(p, x, y);
        }
      } else {
        ++outside;
        if (out.info.size() < kDefaultWitnessCap) {
          out.info.push_back("odot and meet differ outside x' <= y at " + pair_text(p, x, y));
        }
      }
    }
  }
  if (outside > 0) {
    out.info.push_back(std::to_string(outside) +
                       " pair(s) outside x' <= y where the product and the meet differ");
  }
  return out;
}

}  // namespace omkit
