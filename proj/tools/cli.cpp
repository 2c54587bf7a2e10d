#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "omkit/omkit.hpp"

namespace omkit::cli {
namespace {

constexpr std::string_view kCatalogPrefix = "catalog:";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string source;
  std::vector<int> params;
};

ParsedStructure load(const Input& in) {
  if (in.source.rfind(kCatalogPrefix, 0) == 0) {
    const std::string name = in.source.substr(kCatalogPrefix.size());
    AnyStructure s = [&] {
      try {
        return catalog::build(name, in.params);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }();
    ParsedStructure out;
    out.name = name;
    for (int p : in.params) out.name += "_" + std::to_string(p);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, BoundedInvolutivePoset>) {
            out.kind = StructureKind::omp;
            out.raw = v.raw();
          } else {
            out.kind = StructureKind::urp;
            out.raw = v.poset().raw();
          }
        },
        s);
    out.poset_report = validate_poset(out.raw).report;
    out.structure = std::move(s);
    return out;
  }
  if (!in.params.empty()) throw UsageError("parameters are only accepted for catalog: sources");
  std::ifstream file(in.source);
  if (!file) throw UsageError("cannot open '" + in.source + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse(text.str());
}

std::string set_text(const BoundedInvolutivePoset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    if (!first) out += ",";
    out += p.label(x);
    first = false;
  });
  return out + "}";
}

void print_imp_table(std::ostream& out, const BoundedInvolutivePoset& p,
                     const SetValuedBinaryOp& imp) {
  const int n = p.size();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 1),
                                              std::vector<std::string>(static_cast<std::size_t>(n + 1)));
  cells[0][0] = "->";
  for (ElementId x = 0; x < n; ++x) {
    cells[0][static_cast<std::size_t>(x + 1)] = p.label(x);
    cells[static_cast<std::size_t>(x + 1)][0] = p.label(x);
    for (ElementId y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(y + 1)] = set_text(p, imp.at(x, y));
    }
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(n + 1), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        out << row[c] << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
      }
    }
  }
}

int finish(std::ostream& out, const ValidationReport& rep, const BoundedInvolutivePoset& p) {
  out << render_report(rep, p.labels());
  return rep.passed() ? kExitOk : kExitViolation;
}

int cmd_validate(const Input& in, std::ostream& out) {
  const ParsedStructure ps = load(in);
  out << "structure " << (ps.kind == StructureKind::omp ? "omp " : "urp ") << ps.name << " ("
      << ps.raw.le.size() << " elements)\n";
  if (!ps.structure) {
    out << render_report(ps.poset_report, ps.raw.labels);
    return kExitViolation;
  }
  if (const auto* p = std::get_if<BoundedInvolutivePoset>(&*ps.structure)) {
    ValidationReport rep = ps.poset_report;
    const ValidationReport om = check_orthomodular(*p);
    rep.merge(om);
    if (om.passed()) {
      rep.merge(check_cone_decomposition(*p));
      rep.merge(check_implication_properties(*p));
    } else {
      rep.add_note("not orthomodular; cone decomposition and implication checks skipped");
    }
    return finish(out, rep, *p);
  }
  const auto& s = std::get<UnsharpResiduatedStructure>(*ps.structure);
  return finish(out, validate_urp(s), s.poset());
}

int cmd_imp_table(const Input& in, std::ostream& out, std::ostream& err) {
  const ParsedStructure ps = load(in);
  if (!ps.structure) {
    err << "not a bounded involutive poset\n" << render_report(ps.poset_report, ps.raw.labels);
    return kExitViolation;
  }
  if (const auto* p = std::get_if<BoundedInvolutivePoset>(&*ps.structure)) {
    try {
      print_imp_table(out, *p, implication_table(*p));
    } catch (const PartialityError& e) {
      err << "implication undefined: " << e.what() << '\n';
      return kExitViolation;
    }
    return kExitOk;
  }
  const auto& s = std::get<UnsharpResiduatedStructure>(*ps.structure);
  print_imp_table(out, s.poset(), s.imp());
  return kExitOk;
}

int cmd_convert(const Input& in, bool to_urp_flag, bool to_omp_flag, std::ostream& out,
                std::ostream& err) {
  if (to_urp_flag == to_omp_flag) throw UsageError("convert needs exactly one of --to-urp, --to-omp");
  const ParsedStructure ps = load(in);
  if (!ps.structure) {
    err << "not a bounded involutive poset\n" << render_report(ps.poset_report, ps.raw.labels);
    return kExitViolation;
  }
  try {
    if (to_urp_flag) {
      const auto* p = std::get_if<BoundedInvolutivePoset>(&*ps.structure);
      if (!p) throw UsageError("--to-urp expects an omp structure");
      out << serialize(to_urp(*p), ps.name);
    } else {
      const auto* s = std::get_if<UnsharpResiduatedStructure>(&*ps.structure);
      if (!s) throw UsageError("--to-omp expects a urp structure");
      out << serialize(to_omp(*s), ps.name);
    }
  } catch (const FunctorError& e) {
    err << e.what() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_roundtrip(const Input& in, std::ostream& out, std::ostream& err) {
  const ParsedStructure ps = load(in);
  if (!ps.structure) {
    err << "not a bounded involutive poset\n" << render_report(ps.poset_report, ps.raw.labels);
    return kExitViolation;
  }
  RoundTripReport rt;
  try {
    if (const auto* p = std::get_if<BoundedInvolutivePoset>(&*ps.structure)) {
      rt = roundtrip_P(*p);
      out << "P(R(P)) = P: " << (rt.equal ? "equal" : "differs at " + rt.first_discrepancy) << '\n';
    } else {
      rt = roundtrip_R(std::get<UnsharpResiduatedStructure>(*ps.structure));
      out << "R(P(R)): implication tables identical and product agrees on x' <= y: "
          << (rt.equal ? "equal" : "differs at " + rt.first_discrepancy) << '\n';
    }
  } catch (const FunctorError& e) {
    out << "precondition failed: " << e.what() << '\n';
    out << "RESULT fail 1\n";
    return kExitViolation;
  }
  for (const std::string& line : rt.info) out << "note  " << line << '\n';
  out << "RESULT " << (rt.equal ? "pass 0" : "fail 1") << '\n';
  return rt.equal ? kExitOk : kExitViolation;
}

int cmd_catalog(const std::string& name, const std::vector<int>& params, std::ostream& out) {
  if (name.empty()) {
    for (const catalog::CatalogEntry& e : catalog::entries()) {
      out << std::left << std::setw(16) << e.name << std::setw(4) << e.params << e.summary << '\n';
    }
    return kExitOk;
  }
  const ParsedStructure ps = load({std::string(kCatalogPrefix) + name, params});
  out << serialize(*ps.structure, ps.name);
  return kExitOk;
}

int cmd_search(int size, const std::string& cls, bool canonical, bool stress, bool emit, int jobs,
               std::ostream& out) {
  SearchSpec spec;
  spec.size = size;
  spec.canonical = canonical;
  if (cls == "orthomodular-poset") {
    spec.cls = SearchClass::orthomodular_poset;
  } else if (cls == "involutive-poset") {
    spec.cls = SearchClass::involutive_poset;
  } else {
    throw UsageError("unknown class '" + cls + "' (orthomodular-poset | involutive-poset)");
  }
  if (size < kMinSearchSize || size > kMaxSearchSize) {
    throw UsageError("--size must be in [2, 8]");
  }
  if (stress) {
    if (spec.cls != SearchClass::orthomodular_poset) {
      throw UsageError("--stress requires --class orthomodular-poset");
    }
    try {
      const StressSummary sum = stress_constructions(spec, jobs);
      out << "stress: " << sum.tested << " structure(s) tested, " << sum.failures << " failure(s)\n";
      out << "RESULT pass 0\n";
      return kExitOk;
    } catch (const StressFailure& e) {
      out << e.what() << "RESULT fail 1\n";
      return kExitViolation;
    }
  }
  std::size_t index = 0;
  const std::size_t count = enumerate(spec, [&](const BoundedInvolutivePoset& p) {
    if (emit) out << serialize(p, "search_" + std::to_string(size) + "_" + std::to_string(index++));
  });
  out << "count " << count << '\n';
  return kExitOk;
}

int cmd_export_dot(const Input& in, bool show_involution, std::ostream& out, std::ostream& err) {
  const ParsedStructure ps = load(in);
  if (!ps.structure) {
    err << "not a bounded involutive poset\n" << render_report(ps.poset_report, ps.raw.labels);
    return kExitViolation;
  }
  const BoundedInvolutivePoset& p = std::visit(
      [](const auto& v) -> const BoundedInvolutivePoset& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BoundedInvolutivePoset>) {
          return v;
        } else {
          return v.poset();
        }
      },
      *ps.structure);
  out << export_dot(p, ps.name, show_involution);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"omkit: finite orthomodular posets and unsharp residuated posets"};
  app.require_subcommand(1);

  Input input;
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", input.source, "structure file, or catalog:<name>")->required();
    sub->add_option("params", input.params, "catalog parameters");
  };

  CLI::App* validate = app.add_subcommand("validate", "check all laws of a structure");
  add_input(validate);

  CLI::App* imp_table = app.add_subcommand("imp-table", "print the implication table");
  add_input(imp_table);

  CLI::App* convert = app.add_subcommand("convert", "convert between omp and urp");
  bool to_urp_flag = false;
  bool to_omp_flag = false;
  convert->add_flag("--to-urp", to_urp_flag, "orthomodular poset to unsharp residuated poset");
  convert->add_flag("--to-omp", to_omp_flag, "unsharp residuated poset to orthomodular poset");
  add_input(convert);

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "check P(R(P)) = P or R(P(R))");
  add_input(roundtrip);

  CLI::App* cat = app.add_subcommand("catalog", "print a built-in structure, or list them");
  std::string cat_name;
  std::vector<int> cat_params;
  cat->add_option("name", cat_name, "catalog entry");
  cat->add_option("params", cat_params, "integer parameters");

  CLI::App* search = app.add_subcommand("search", "enumerate small structures");
  int size = 0;
  std::string cls = "orthomodular-poset";
  bool canonical = false;
  bool stress = false;
  bool emit = false;
  int jobs = 1;
  search->add_option("--size", size, "carrier size, 2..8")->required();
  search->add_option("--class", cls, "orthomodular-poset | involutive-poset");
  search->add_flag("--canonical", canonical, "one representative per isomorphism class");
  search->add_flag("--stress", stress, "check the constructions on every result");
  search->add_flag("--emit", emit, "print every structure found");
  search->add_option("--jobs", jobs, "worker threads for --stress")->check(CLI::PositiveNumber);

  CLI::App* dot = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
  bool show_involution = false;
  dot->add_flag("--show-involution", show_involution, "draw x -- x' edges");
  add_input(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, out);
    if (imp_table->parsed()) return cmd_imp_table(input, out, err);
    if (convert->parsed()) return cmd_convert(input, to_urp_flag, to_omp_flag, out, err);
    if (roundtrip->parsed()) return cmd_roundtrip(input, out, err);
    if (cat->parsed()) return cmd_catalog(cat_name, cat_params, out);
    if (search->parsed()) return cmd_search(size, cls, canonical, stress, emit, jobs, out);
    if (dot->parsed()) return cmd_export_dot(input, show_involution, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "structure error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace omkit::cli
