#include "omkit/search.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <thread>

#include "omkit/functors.hpp"
#include "omkit/omp.hpp"
#include "omkit/structure_file.hpp"
#include "omkit/urp.hpp"

namespace omkit {
namespace {

constexpr int kMaxMiddle = kMaxSearchSize - 2;
using Mask = std::uint32_t;

// Labelled partial orders on m elements, built one element at a time.
class OrderGenerator {
 public:
  using Above = std::vector<Mask>;
  using Leaf = std::function<void(const Above& above)>;

  OrderGenerator(int m, Leaf leaf)
      : m_(m), leaf_(std::move(leaf)), below_(static_cast<std::size_t>(m) + 1), above_(static_cast<std::size_t>(m) + 1) {}

  void run() { extend(0); }

 private:
  void extend(int k) {
    if (k == m_) {
      leaf_(above_);
      return;
    }
    const Mask span = (Mask{1} << k) - 1;
    std::vector<Mask> downs;
    std::vector<Mask> ups;
    for (Mask s = 0; s <= span; ++s) {
      bool down_closed = true;
      bool up_closed = true;
      for (int i = 0; i < k; ++i) {
        if (!((s >> i) & 1u)) continue;
        if ((below_[i] & ~s) != 0) down_closed = false;
        if ((above_[i] & ~s) != 0) up_closed = false;
      }
      if (down_closed) downs.push_back(s);
      if (up_closed) ups.push_back(s);
    }
    const Mask self = Mask{1} << k;
    for (Mask d : downs) {
      Mask common_above = span;
      for (int i = 0; i < k; ++i) {
        if ((d >> i) & 1u) common_above &= above_[i];
      }
      for (Mask u : ups) {
        if ((d & u) != 0 || (u & ~common_above) != 0) continue;
        below_[k] = d;
        above_[k] = u;
        for (int i = 0; i < k; ++i) {
          if ((d >> i) & 1u) above_[i] |= self;
          if ((u >> i) & 1u) below_[i] |= self;
        }
        extend(k + 1);
        for (int i = 0; i < k; ++i) {
          above_[i] &= ~self;
          below_[i] &= ~self;
        }
      }
    }
    below_[k] = above_[k] = 0;
  }

  int m_;
  Leaf leaf_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

// Bot/top-swapping involutions of the middle elements; fixed points are
// skipped when `allow_fixed` is false.
void for_each_matching(int m, bool allow_fixed,
                       const std::function<void(const std::array<int, kMaxMiddle>&)>& f) {
  std::array<int, kMaxMiddle> sigma{};
  sigma.fill(-1);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < m && sigma[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == m) {
      f(sigma);
      return;
    }
    const auto at = [&](int x) -> int& { return sigma[static_cast<std::size_t>(x)]; };
    if (allow_fixed) {
      at(i) = i;
      rec();
      at(i) = -1;
    }
    for (int j = i + 1; j < m; ++j) {
      if (at(j) >= 0) continue;
      at(i) = j;
      at(j) = i;
      rec();
      at(i) = at(j) = -1;
    }
  };
  rec();
}

// Colour refinement: starts from (|down|, |up|, fixed point) and refines by
// the colours of x', of elements strictly above and strictly below, until
// stable. Colours are ranks of sorted signatures, hence labelling-invariant.
std::vector<int> refine_colours(const BoundedInvolutivePoset& p) {
  const int n = p.size();
  std::vector<int> colour(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (ElementId x = 0; x < n; ++x) {
    sig[static_cast<std::size_t>(x)] = {p.down(x).size(), p.up(x).size(), p.inv(x) == x ? 1 : 0};
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (ElementId x = 0; x < n; ++x) {
      const auto& s = sig[static_cast<std::size_t>(x)];
      colour[static_cast<std::size_t>(x)] =
          static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
    for (ElementId x = 0; x < n; ++x) {
      std::vector<int> s = {colour[static_cast<std::size_t>(x)],
                            colour[static_cast<std::size_t>(p.inv(x))]};
      std::vector<int> ups;
      std::vector<int> downs;
      for (ElementId y = 0; y < n; ++y) {
        if (p.lt(x, y)) ups.push_back(colour[static_cast<std::size_t>(y)]);
        if (p.lt(y, x)) downs.push_back(colour[static_cast<std::size_t>(y)]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      s.insert(s.end(), ups.begin(), ups.end());
      s.push_back(-1);
      s.insert(s.end(), downs.begin(), downs.end());
      sig[static_cast<std::size_t>(x)] = std::move(s);
    }
  }
  return colour;
}

std::vector<std::uint8_t> encode(const BoundedInvolutivePoset& p,
                                 const std::vector<ElementId>& at,
                                 const std::vector<int>& pos) {
  const int n = p.size();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(1 + 3 * n));
  out.push_back(static_cast<std::uint8_t>(n));
  for (int i = 0; i < n; ++i) {
    const ElementId x = at[static_cast<std::size_t>(i)];
    unsigned row = 0;
    for (int j = 0; j < n; ++j) {
      if (p.le(x, at[static_cast<std::size_t>(j)])) row |= 1u << j;
    }
    out.push_back(static_cast<std::uint8_t>(row & 0xffu));
    out.push_back(static_cast<std::uint8_t>(row >> 8));
  }
  for (int i = 0; i < n; ++i) {
    out.push_back(static_cast<std::uint8_t>(
        pos[static_cast<std::size_t>(p.inv(at[static_cast<std::size_t>(i)]))]));
  }
  return out;
}

std::string class_name(SearchClass c) {
  return c == SearchClass::orthomodular_poset ? "orthomodular-poset" : "involutive-poset";
}

}  // namespace

CanonicalForm canonical_form(const BoundedInvolutivePoset& p) {
  const int n = p.size();
  if (n > kMaxCanonicalSize) {
    throw PreconditionError("canonical_form supports at most " +
                            std::to_string(kMaxCanonicalSize) + " elements");
  }
  const std::vector<int> colour = refine_colours(p);
  std::vector<ElementId> middle;
  for (ElementId x = 0; x < n; ++x) {
    if (x != p.bot() && x != p.top()) middle.push_back(x);
  }
  std::sort(middle.begin(), middle.end(), [&](ElementId a, ElementId b) {
    const int ca = colour[static_cast<std::size_t>(a)];
    const int cb = colour[static_cast<std::size_t>(b)];
    return ca != cb ? ca < cb : a < b;
  });
  // Blocks of equal colour, as [begin, end) ranges into `middle`.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < middle.size();) {
    std::size_t j = i;
    while (j < middle.size() && colour[static_cast<std::size_t>(middle[j])] ==
                                    colour[static_cast<std::size_t>(middle[i])]) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<ElementId> at(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n));
  CanonicalForm best;
  bool have = false;
  while (true) {
    at.front() = p.bot();
    at.back() = p.top();
    for (std::size_t i = 0; i < middle.size(); ++i) at[i + 1] = middle[i];
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint8_t> bytes = encode(p, at, pos);
    if (!have || bytes < best.bytes) {
      best.bytes = std::move(bytes);
      have = true;
    }
    // Odometer over the per-block permutations.
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      auto first = middle.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = middle.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
      if (b == 0) return best;
    }
    if (blocks.empty()) return best;
  }
}

std::size_t enumerate(const SearchSpec& spec, const SearchSink& sink) {
  if (spec.size < kMinSearchSize || spec.size > kMaxSearchSize) {
    throw PreconditionError("search size must be in [" + std::to_string(kMinSearchSize) +
                            ", " + std::to_string(kMaxSearchSize) + "]");
  }
  const int n = spec.size;
  const int m = n - 2;
  const bool omp_only = spec.cls == SearchClass::orthomodular_poset;
  // An orthomodular poset has no fixed points of ' (x v x' = 1), so its
  // middle elements pair up.
  if (omp_only && m % 2 != 0) return 0;

  std::set<CanonicalForm> seen;
  std::size_t count = 0;
  std::vector<std::string> labels = {"0"};
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("1");

  OrderGenerator gen(m, [&](const OrderGenerator::Above& above) {
    // up[x] over the full carrier: 0 = bot, i+1 = middle i, n-1 = top.
    std::array<std::uint32_t, kMaxSearchSize> up{};
    const std::uint32_t top_bit = 1u << (n - 1);
    up[0] = (1u << n) - 1;
    up[static_cast<std::size_t>(n - 1)] = top_bit;
    for (int i = 0; i < m; ++i) {
      up[static_cast<std::size_t>(i + 1)] =
          (above[static_cast<std::size_t>(i)] << 1) | (1u << (i + 1)) | top_bit;
    }
    for_each_matching(m, !omp_only, [&](const std::array<int, kMaxMiddle>& sigma) {
      std::array<int, kMaxSearchSize> inv{};
      inv[0] = n - 1;
      inv[static_cast<std::size_t>(n - 1)] = 0;
      for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(i + 1)] = sigma[static_cast<std::size_t>(i)] + 1;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (((up[static_cast<std::size_t>(a)] >> b) & 1u) &&
              !((up[static_cast<std::size_t>(inv[static_cast<std::size_t>(b)])] >>
                 inv[static_cast<std::size_t>(a)]) & 1u)) {
            return;
          }
        }
      }
      RawPoset raw;
      raw.le.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          raw.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              (up[static_cast<std::size_t>(a)] >> b) & 1u;
        }
      }
      raw.inv.assign(inv.begin(), inv.begin() + n);
      raw.bot = 0;
      raw.top = n - 1;
      raw.labels = labels;
      BoundedInvolutivePoset p = make_poset(raw);
      if (omp_only && !is_orthomodular(p)) return;
      if (spec.canonical && !seen.insert(canonical_form(p)).second) return;
      ++count;
      if (sink) sink(p);
    });
  });
  gen.run();
  return count;
}

StressSummary stress_constructions(const SearchSpec& spec, int jobs) {
  if (spec.cls != SearchClass::orthomodular_poset) {
    throw PreconditionError("stress_constructions requires class " +
                            class_name(SearchClass::orthomodular_poset));
  }
  std::vector<BoundedInvolutivePoset> all;
  enumerate(spec, [&](const BoundedInvolutivePoset& p) { all.push_back(p); });

  // Empty string = passed; otherwise the first failing check.
  const auto check = [](const BoundedInvolutivePoset& p) -> std::string {
    const UnsharpResiduatedStructure r = to_urp(p);
    const ValidationReport rep = validate_urp(r, 1);
    if (!is_divisible_idempotent_urp(rep)) return "validate_urp on R(P)";
    if (!rep.holds(law::kZeroAbsorbing)) return "x odot 0 = 0 on R(P)";
    if (!check_cone_decomposition(p, 1).passed()) return "cone decomposition";
    if (!check_implication_properties(p, 1).passed()) return "implication properties";
    const RoundTripReport rt = roundtrip_P(p);
    if (!rt.equal) return "P(R(P)) = P: " + rt.first_discrepancy;
    return {};
  };

  const std::size_t workers =
      static_cast<std::size_t>(std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(all.size(), 1)))));
  std::vector<std::string> verdict(all.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < all.size(); i += workers) {
        try {
          verdict[i] = check(all[i]);
        } catch (const std::exception& e) {
          verdict[i] = e.what();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!verdict[i].empty()) {
      throw StressFailure("stress check failed (" + verdict[i] + ") on:\n" +
                          serialize(all[i], "stress_failure"));
    }
  }
  return {all.size(), 0};
}

}  // namespace omkit
