#include "omkit/catalog.hpp"

#include <bit>

namespace omkit::catalog {
namespace {

std::string brace_label(unsigned mask, int bits) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < bits; ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

// Subsets of {1..bits} selected by `keep`, ordered by inclusion, with
// complement as involution.
template <typename Keep>
BoundedInvolutivePoset subset_family(int bits, Keep keep) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << bits); ++m) {
    if (keep(m)) masks.push_back(m);
  }
  const std::size_t n = masks.size();
  const unsigned full = (1u << bits) - 1;
  RawPoset r;
  r.le.assign(n, std::vector<bool>(n, false));
  r.inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.labels.push_back(brace_label(masks[i], bits));
    for (std::size_t j = 0; j < n; ++j) {
      r.le[i][j] = (masks[i] & ~masks[j]) == 0;
      if (masks[j] == (full & ~masks[i])) r.inv[i] = static_cast<ElementId>(j);
    }
  }
  r.bot = 0;
  r.top = static_cast<ElementId>(n - 1);
  return make_poset(r);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

BoundedInvolutivePoset even_subsets(int m) {
  require(m >= 2 && m % 2 == 0, "even_subsets: m must be even and >= 2");
  require(m <= 6, "even_subsets: m > 6 exceeds the 64-element carrier limit");
  return subset_family(m, [](unsigned s) { return std::popcount(s) % 2 == 0; });
}

BoundedInvolutivePoset boolean_algebra(int k) {
  require(k >= 1 && k <= 6, "boolean_algebra: k must be in [1, 6]");
  return subset_family(k, [](unsigned) { return true; });
}

BoundedInvolutivePoset mo(int k) {
  require(k >= 1 && k <= 31, "mo: k must be in [1, 31]");
  const std::size_t n = static_cast<std::size_t>(2 * k + 2);
  const ElementId top = static_cast<ElementId>(n - 1);
  RawPoset r;
  r.le.assign(n, std::vector<bool>(n, false));
  r.inv.assign(n, 0);
  r.labels.push_back("0");
  for (int i = 0; i < k; ++i) {
    std::string base = k <= 26 ? std::string(1, static_cast<char>('a' + i))
                               : "a" + std::to_string(i + 1);
    r.labels.push_back(base);
    r.labels.push_back(base + "'");
  }
  r.labels.push_back("1");
  for (std::size_t x = 0; x < n; ++x) {
    r.le[x][x] = true;
    r.le[0][x] = true;
    r.le[x][n - 1] = true;
  }
  r.inv[0] = top;
  r.inv[n - 1] = 0;
  for (int i = 0; i < k; ++i) {
    r.inv[static_cast<std::size_t>(2 * i + 1)] = 2 * i + 2;
    r.inv[static_cast<std::size_t>(2 * i + 2)] = 2 * i + 1;
  }
  r.bot = 0;
  r.top = top;
  return make_poset(r);
}

UnsharpResiduatedStructure example2() {
  // 0 a a' b b' 1
  enum : ElementId { Z = 0, A = 1, Ac = 2, B = 3, Bc = 4, I = 5 };
  constexpr int n = 6;
  RawPoset r;
  r.labels = {"0", "a", "a'", "b", "b'", "1"};
  r.le.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    r.le[x][x] = true;
    r.le[Z][x] = true;
    r.le[x][I] = true;
  }
  r.inv = {I, Ac, A, Bc, B, Z};
  r.bot = Z;
  r.top = I;
  BoundedInvolutivePoset p = make_poset(r);

  constexpr ElementId odot[n][n] = {
      {Z, Z, Z, Z, Z, Z},
      {Z, A, Z, Z, Z, A},
      {Z, Z, Ac, Z, Z, Ac},
      {Z, Z, Z, B, Z, B},
      {Z, Z, Z, Z, Bc, Bc},
      {Z, A, Ac, B, Bc, I},
  };
  PartialBinaryOp prod(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) prod.set(x, y, odot[x][y]);
  }

  const auto s = [](std::initializer_list<ElementId> xs) { return Subset::of(n, xs); };
  const Subset all = Subset::full(n);
  const Subset imp[n][n] = {
      {s({I}), s({I}), s({I}), s({I}), s({I}), s({I})},
      {s({Ac}), s({Ac, I}), s({Ac}), s({Ac}), s({Ac}), s({Ac, I})},
      {s({A}), s({A}), s({A, I}), s({A}), s({A}), s({A, I})},
      {s({Bc}), s({Bc}), s({Bc}), s({Bc, I}), s({Bc}), s({Bc, I})},
      {s({B}), s({B}), s({B}), s({B}), s({B, I}), s({B, I})},
      {s({Z}), s({Z, A}), s({Z, Ac}), s({Z, B}), s({Z, Bc}), all},
  };
  SetValuedBinaryOp arrow(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) arrow.set(x, y, imp[x][y]);
  }
  return UnsharpResiduatedStructure(std::move(p), std::move(prod), std::move(arrow));
}

std::span<const CatalogEntry> entries() {
  static const std::vector<CatalogEntry> kEntries = {
      {"even_subsets", "m", "even-cardinality subsets of {1..m}, m in {2,4,6}", 1},
      {"boolean_algebra", "k", "power set of {1..k}, 1 <= k <= 6", 1},
      {"mo", "k", "MO_k: bounds plus k complementary atom pairs, 1 <= k <= 31", 1},
      {"example2", "", "six-element unsharp residuated poset with literal tables", 0},
  };
  return kEntries;
}

AnyStructure build(std::string_view name, std::span<const int> params) {
  for (const CatalogEntry& e : entries()) {
    if (e.name != name) continue;
    if (static_cast<int>(params.size()) != e.arity) {
      throw PreconditionError("catalog entry '" + e.name + "' takes " +
                              std::to_string(e.arity) + " parameter(s)");
    }
    if (name == "even_subsets") return even_subsets(params[0]);
    if (name == "boolean_algebra") return boolean_algebra(params[0]);
    if (name == "mo") return mo(params[0]);
    return example2();
  }
  throw PreconditionError("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, BoundedInvolutivePoset>> orthomodular_fixtures() {
  std::vector<std::pair<std::string, BoundedInvolutivePoset>> out;
  for (int m : {2, 4, 6}) out.emplace_back("even_subsets(" + std::to_string(m) + ")", even_subsets(m));
  for (int k = 1; k <= 4; ++k) {
    out.emplace_back("boolean_algebra(" + std::to_string(k) + ")", boolean_algebra(k));
  }
  for (int k = 1; k <= 4; ++k) out.emplace_back("mo(" + std::to_string(k) + ")", mo(k));
  out.emplace_back("example2 reduct", example2().poset());
  return out;
}

}  // namespace omkit::catalog
