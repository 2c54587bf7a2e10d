#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "omkit/catalog.hpp"
#include "omkit/poset.hpp"
#include "omkit/report.hpp"
#include "omkit/urp.hpp"

namespace omkit {

// Line-oriented structure files:
//
//   structure (omp|urp) <name> [derived-imp]
//   elements <name>...
//   le <a> <b>
//   bot <a>
//   top <b>
//   inv <a> <b>
//   odot <a> <b> <c>          (urp only)
//   imp <a> <b> <c1> ... <ck> (urp only)
//   end
//
// `#` starts a comment. The order is the reflexive-transitive closure of
// the `le` pairs. Missing `odot` pairs are undefined unless the mirrored
// pair is given. Missing `imp` pairs are computed as x' v L(x, y); with
// `derived-imp`, listed pairs are also checked against that formula.

enum class StructureKind { omp, urp };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedStructure {
  std::string name;
  StructureKind kind = StructureKind::omp;
  bool derived_imp = false;
  // Order after closure; may still violate bounds or antitonicity.
  RawPoset raw;
  // validate_poset(raw).
  ValidationReport poset_report;
  // Present iff poset_report passed.
  std::optional<AnyStructure> structure;
};

// Throws ParseError for syntax errors, unknown elements, duplicate
// directives, a closure that breaks antisymmetry, or a non-involutive `inv`.
// Other poset law violations are left in poset_report.
ParsedStructure parse(std::string_view text);

std::string serialize(const BoundedInvolutivePoset& p, std::string_view name);
std::string serialize(const UnsharpResiduatedStructure& s, std::string_view name);
std::string serialize(const AnyStructure& s, std::string_view name);

}  // namespace omkit
