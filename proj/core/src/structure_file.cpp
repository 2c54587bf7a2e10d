#include "omkit/structure_file.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "omkit/omp.hpp"

namespace omkit {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

class Parser {
 public:
  ParsedStructure run(std::string_view text) {
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
      const std::size_t stop = std::min(text.find('\n', start), text.size());
      std::string_view line = text.substr(start, stop - start);
      start = stop + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      const std::vector<std::string> tok = tokenize(line);
      if (tok.empty()) continue;
      if (ended_) throw ParseError(line_no, "content after 'end'");
      directive(line_no, tok);
      if (stop == text.size()) break;
    }
    if (!ended_) throw ParseError(line_no, "missing 'end'");
    return finish();
  }

 private:
  void directive(int line, const std::vector<std::string>& tok) {
    const std::string& d = tok[0];
    if (d != "structure" && !have_header_) {
      throw ParseError(line, "expected 'structure' directive first");
    }
    if (d == "structure") {
      if (have_header_) throw ParseError(line, "duplicate 'structure' directive");
      if (tok.size() < 3 || tok.size() > 4) {
        throw ParseError(line, "usage: structure (omp|urp) <name> [derived-imp]");
      }
      if (tok[1] == "omp") {
        out_.kind = StructureKind::omp;
      } else if (tok[1] == "urp") {
        out_.kind = StructureKind::urp;
      } else {
        throw ParseError(line, "unknown structure kind '" + tok[1] + "'");
      }
      out_.name = tok[2];
      if (tok.size() == 4) {
        if (tok[3] != "derived-imp" || out_.kind != StructureKind::urp) {
          throw ParseError(line, "unexpected '" + tok[3] + "'");
        }
        out_.derived_imp = true;
      }
      have_header_ = true;
    } else if (d == "elements") {
      if (!labels_.empty()) throw ParseError(line, "duplicate 'elements' directive");
      if (tok.size() < 2) throw ParseError(line, "'elements' needs at least one name");
      if (tok.size() - 1 > static_cast<std::size_t>(kMaxCarrier)) {
        throw ParseError(line, "more than " + std::to_string(kMaxCarrier) + " elements");
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index_.emplace(tok[i], static_cast<ElementId>(i - 1)).second) {
          throw ParseError(line, "duplicate element name '" + tok[i] + "'");
        }
        labels_.push_back(tok[i]);
      }
      const std::size_t n = labels_.size();
      le_.assign(n, std::vector<bool>(n, false));
      inv_.assign(n, -1);
      inv_line_.assign(n, 0);
    } else if (d == "le") {
      arity(line, tok, 3);
      const ElementId a = element(line, tok[1]);
      const ElementId b = element(line, tok[2]);
      le_lines_.push_back({line, a, b});
    } else if (d == "bot" || d == "top") {
      arity(line, tok, 2);
      std::optional<ElementId>& slot = d == "bot" ? bot_ : top_;
      if (slot) throw ParseError(line, "duplicate '" + d + "' directive");
      slot = element(line, tok[1]);
    } else if (d == "inv") {
      arity(line, tok, 3);
      const ElementId a = element(line, tok[1]);
      const ElementId b = element(line, tok[2]);
      set_inv(line, a, b);
      set_inv(line, b, a);
    } else if (d == "odot") {
      urp_only(line, d);
      arity(line, tok, 4);
      const ElementId a = element(line, tok[1]);
      const ElementId b = element(line, tok[2]);
      if (!odot_.emplace(std::pair{a, b}, element(line, tok[3])).second) {
        throw ParseError(line, "duplicate 'odot " + tok[1] + " " + tok[2] + "'");
      }
    } else if (d == "imp") {
      urp_only(line, d);
      if (tok.size() < 3) throw ParseError(line, "usage: imp <a> <b> <c1> ... <ck>");
      const ElementId a = element(line, tok[1]);
      const ElementId b = element(line, tok[2]);
      Subset s(static_cast<int>(labels_.size()));
      for (std::size_t i = 3; i < tok.size(); ++i) s.insert(element(line, tok[i]));
      if (!imp_.emplace(std::pair{a, b}, std::pair{line, s}).second) {
        throw ParseError(line, "duplicate 'imp " + tok[1] + " " + tok[2] + "'");
      }
    } else if (d == "end") {
      arity(line, tok, 1);
      ended_ = true;
      end_line_ = line;
    } else {
      throw ParseError(line, "unknown directive '" + d + "'");
    }
  }

  ParsedStructure finish() {
    const int line = end_line_;
    if (labels_.empty()) throw ParseError(line, "missing 'elements' directive");
    if (!bot_) throw ParseError(line, "missing 'bot' directive");
    if (!top_) throw ParseError(line, "missing 'top' directive");
    const int n = static_cast<int>(labels_.size());
    for (ElementId x = 0; x < n; ++x) {
      if (inv_[static_cast<std::size_t>(x)] < 0) {
        throw ParseError(line, "non-involutive inv: no complement given for '" +
                                   labels_[static_cast<std::size_t>(x)] + "'");
      }
    }

    // Add the pairs one at a time so the error names the line that closes
    // the first cycle.
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::vector<bool>> closed(size, std::vector<bool>(size, false));
    for (std::size_t x = 0; x < size; ++x) closed[x][x] = true;
    for (const LePair& e : le_lines_) {
      const auto a = static_cast<std::size_t>(e.a);
      const auto b = static_cast<std::size_t>(e.b);
      if (closed[a][b]) continue;
      if (closed[b][a]) {
        throw ParseError(e.line, "antisymmetry violated after closure: " + labels_[a] + " <= " +
                                     labels_[b] + " and " + labels_[b] + " <= " + labels_[a]);
      }
      for (std::size_t x = 0; x < size; ++x) {
        if (!closed[x][a]) continue;
        for (std::size_t y = 0; y < size; ++y) {
          if (closed[b][y]) closed[x][y] = true;
        }
      }
    }
    le_ = std::move(closed);

    out_.raw.le = le_;
    out_.raw.inv = inv_;
    out_.raw.bot = *bot_;
    out_.raw.top = *top_;
    out_.raw.labels = labels_;
    PosetValidation v = validate_poset(out_.raw);
    out_.poset_report = std::move(v.report);
    if (!v.poset) return std::move(out_);

    if (out_.kind == StructureKind::omp) {
      out_.structure = std::move(*v.poset);
      return std::move(out_);
    }

    const BoundedInvolutivePoset& p = *v.poset;
    PartialBinaryOp odot(n);
    for (const auto& [key, value] : odot_) odot.set(key.first, key.second, value);
    for (const auto& [key, value] : odot_) {
      if (!odot_.count({key.second, key.first})) odot.set(key.second, key.first, value);
    }

    SetValuedBinaryOp imp(n);
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        const auto given = imp_.find({x, y});
        if (given != imp_.end() && !out_.derived_imp) {
          imp.set(x, y, given->second.second);
          continue;
        }
        const int at = given != imp_.end() ? given->second.first : line;
        Subset formula;
        try {
          formula = implication(p, x, y);
        } catch (const PartialityError& e) {
          throw ParseError(at, "imp " + p.label(x) + " " + p.label(y) +
                                   " cannot be derived: " + e.what());
        }
        if (given != imp_.end() && given->second.second != formula) {
          throw ParseError(at, "imp " + p.label(x) + " " + p.label(y) +
                                   " differs from x' v L(x, y)");
        }
        imp.set(x, y, formula);
      }
    }
    out_.structure = UnsharpResiduatedStructure(p, std::move(odot), std::move(imp));
    return std::move(out_);
  }

  ElementId element(int line, const std::string& name) const {
    if (labels_.empty()) throw ParseError(line, "'elements' must come before '" + name + "' is used");
    const auto it = index_.find(name);
    if (it == index_.end()) throw ParseError(line, "unknown element '" + name + "'");
    return it->second;
  }

  static void arity(int line, const std::vector<std::string>& tok, std::size_t n) {
    if (tok.size() != n) {
      throw ParseError(line, "'" + tok[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
    }
  }

  void urp_only(int line, const std::string& d) const {
    if (out_.kind != StructureKind::urp) {
      throw ParseError(line, "'" + d + "' is only allowed in urp structures");
    }
  }

  void set_inv(int line, ElementId a, ElementId b) {
    ElementId& slot = inv_[static_cast<std::size_t>(a)];
    if (slot >= 0 && slot != b) {
      throw ParseError(line, "non-involutive inv: '" + labels_[static_cast<std::size_t>(a)] +
                                 "' already paired with '" +
                                 labels_[static_cast<std::size_t>(slot)] + "' (line " +
                                 std::to_string(inv_line_[static_cast<std::size_t>(a)]) + ")");
    }
    slot = b;
    inv_line_[static_cast<std::size_t>(a)] = line;
  }

  struct LePair {
    int line;
    ElementId a;
    ElementId b;
  };

  ParsedStructure out_;
  bool have_header_ = false;
  bool ended_ = false;
  int end_line_ = 0;
  std::vector<std::string> labels_;
  std::map<std::string, ElementId> index_;
  std::vector<std::vector<bool>> le_;
  std::vector<LePair> le_lines_;
  std::vector<ElementId> inv_;
  std::vector<int> inv_line_;
  std::optional<ElementId> bot_;
  std::optional<ElementId> top_;
  std::map<std::pair<ElementId, ElementId>, ElementId> odot_;
  std::map<std::pair<ElementId, ElementId>, std::pair<int, Subset>> imp_;
};

std::string token(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#') c = '_';
  }
  return out.empty() ? "_" : out;
}

void write_poset(std::ostringstream& os, const BoundedInvolutivePoset& p) {
  os << "elements";
  for (const std::string& l : p.labels()) os << ' ' << token(l);
  os << '\n';
  for (const auto& [a, b] : covering_pairs(p)) {
    os << "le " << token(p.label(a)) << ' ' << token(p.label(b)) << '\n';
  }
  os << "bot " << token(p.label(p.bot())) << '\n';
  os << "top " << token(p.label(p.top())) << '\n';
  for (ElementId x = 0; x < p.size(); ++x) {
    if (x <= p.inv(x)) os << "inv " << token(p.label(x)) << ' ' << token(p.label(p.inv(x))) << '\n';
  }
}

}  // namespace

ParsedStructure parse(std::string_view text) { return Parser().run(text); }

std::string serialize(const BoundedInvolutivePoset& p, std::string_view name) {
  std::ostringstream os;
  os << "structure omp " << token(name) << '\n';
  write_poset(os, p);
  os << "end\n";
  return os.str();
}

std::string serialize(const UnsharpResiduatedStructure& s, std::string_view name) {
  const BoundedInvolutivePoset& p = s.poset();
  std::ostringstream os;
  os << "structure urp " << token(name) << '\n';
  write_poset(os, p);
  const int n = s.size();
  const auto lab = [&](ElementId x) { return token(p.label(x)); };
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) {
      if (const auto v = s.odot().at(a, b)) os << "odot " << lab(a) << ' ' << lab(b) << ' ' << lab(*v) << '\n';
    }
  }
  // Entries that the commutative closure would not reproduce.
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < a; ++b) {
      const auto v = s.odot().at(a, b);
      if (v && v != s.odot().at(b, a)) os << "odot " << lab(a) << ' ' << lab(b) << ' ' << lab(*v) << '\n';
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      os << "imp " << lab(a) << ' ' << lab(b);
      s.imp().at(a, b).for_each([&](ElementId c) { os << ' ' << lab(c); });
      os << '\n';
    }
  }
  os << "end\n";
  return os.str();
}

std::string serialize(const AnyStructure& s, std::string_view name) {
  return std::visit([&](const auto& v) { return serialize(v, name); }, s);
}

}  // namespace omkit
