#include "omkit/dot.hpp"

#include <sstream>

namespace omkit {
namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const BoundedInvolutivePoset& p, std::string_view name,
                       bool show_involution) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (ElementId x = 0; x < p.size(); ++x) {
    os << "  n" << x << " [label=" << quoted(p.label(x)) << "];\n";
  }
  for (const auto& [a, b] : covering_pairs(p)) {
    os << "  n" << a << " -> n" << b << ";\n";
  }
  if (show_involution) {
    for (ElementId x = 0; x < p.size(); ++x) {
      if (x < p.inv(x)) {
        os << "  n" << x << " -> n" << p.inv(x)
           << " [dir=none, style=dashed, constraint=false];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace omkit
