#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "omkit/omkit.hpp"

using namespace omkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kChainHeader =
    "structure omp chain\n"
    "elements 0 1\n";

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("parse accepted the input");
  return -1;
}

std::string error_text(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  FAIL("parse accepted the input");
  return {};
}

}  // namespace

TEST_CASE("the shipped six-element file matches the catalog entry") {
  const ParsedStructure parsed = parse(read_file(fixtures::data_path("example2.urp")));
  CHECK(parsed.name == "example2");
  CHECK(parsed.kind == StructureKind::urp);
  REQUIRE(parsed.structure.has_value());
  const auto& s = std::get<UnsharpResiduatedStructure>(*parsed.structure);
  CHECK(s == catalog::example2());
  CHECK(validate_urp(s).passed());
}

TEST_CASE("shipped failing fixtures parse") {
  const ParsedStructure mutant = parse(read_file(fixtures::data_path("mutant.urp")));
  REQUIRE(mutant.structure.has_value());
  CHECK(std::get<UnsharpResiduatedStructure>(*mutant.structure) ==
        fixtures::example2_imp_tampered());

  const ParsedStructure hex = parse(read_file(fixtures::data_path("hexagon.omp")));
  REQUIRE(hex.structure.has_value());
  CHECK_FALSE(is_orthomodular(std::get<BoundedInvolutivePoset>(*hex.structure)));
}

TEST_CASE("serialize then parse is the identity on catalog structures") {
  std::vector<AnyStructure> all = {catalog::example2(), fixtures::example2_imp_tampered(),
                                   fixtures::hexagon(), fixtures::hexagon_urp(),
                                   fixtures::with_odot(catalog::example2(), 1, 3, std::nullopt, true)};
  for (const auto& [name, p] : catalog::orthomodular_fixtures()) {
    all.emplace_back(p);
    all.emplace_back(to_urp(p));
  }
  all.emplace_back(catalog::mo(31));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CAPTURE(i);
    const std::string text = serialize(all[i], "s");
    const ParsedStructure parsed = parse(text);
    REQUIRE(parsed.structure.has_value());
    CHECK(*parsed.structure == all[i]);
    CHECK(serialize(*parsed.structure, "s") == text);
  }
}

TEST_CASE("a minimal omp file") {
  const ParsedStructure parsed = parse(kChainHeader +
                                       "# comment line\n"
                                       "le 0 1   # trailing comment\n"
                                       "bot 0\ntop 1\ninv 0 1\nend\n");
  REQUIRE(parsed.structure.has_value());
  const auto& p = std::get<BoundedInvolutivePoset>(*parsed.structure);
  CHECK(p.raw().le == catalog::boolean_algebra(1).raw().le);
  CHECK(p.involution() == catalog::boolean_algebra(1).involution());
}

TEST_CASE("a closure that breaks antisymmetry is reported at the le line") {
  const std::string text = kChainHeader + "le 0 1\nle 1 0\nbot 0\ntop 1\ninv 0 1\nend\n";
  CHECK(error_line(text) == 4);
  // the cycle 0 <= a <= b <= 0 closes on the third pair
  CHECK(error_line("structure omp c\nelements 0 a b\nle 0 a\nle a b\nle b 0\n"
                   "bot 0\ntop b\ninv 0 b\ninv a a\nend\n") == 5);
  CHECK(error_text(text).find("antisymmetry") != std::string::npos);
}

TEST_CASE("syntax and reference errors") {
  CHECK(error_text(kChainHeader + "le 0 2\n").find("unknown element '2'") != std::string::npos);
  CHECK(error_line(kChainHeader + "le 0 1\nbot 0\nbot 0\n") == 5);
  CHECK(error_text(kChainHeader + "elements 0 1\n").find("duplicate") != std::string::npos);
  CHECK(error_text(kChainHeader + "frobnicate 0\n").find("unknown directive") != std::string::npos);
  CHECK(error_text(kChainHeader + "le 0 1\nbot 0\ntop 1\ninv 0 1\n").find("missing 'end'") !=
        std::string::npos);
  CHECK(error_line(kChainHeader + "le 0 1\nbot 0\ntop 1\ninv 0 1\nend\nle 0 1\n") == 8);
  CHECK(error_text(kChainHeader + "le 0 1\nbot 0\ntop 1\ninv 0 1\nodot 0 0 0\nend\n")
            .find("only allowed in urp") != std::string::npos);
  CHECK(error_text("elements 0 1\n").find("'structure'") != std::string::npos);
  CHECK(error_text("structure lattice x\nend\n").find("unknown structure kind") != std::string::npos);
  CHECK(error_text(kChainHeader + "le 0\n").find("argument") != std::string::npos);
  CHECK(error_text("structure omp x\nelements a a\nend\n").find("duplicate element") !=
        std::string::npos);
}

TEST_CASE("non-involutive inv is a parse error") {
  const std::string base = "structure omp t\nelements 0 a b 1\nle 0 a\nle 0 b\nle a 1\nle b 1\n"
                           "bot 0\ntop 1\ninv 0 1\n";
  CHECK(error_text(base + "inv a b\ninv a 1\nend\n").find("non-involutive") != std::string::npos);
  CHECK(error_line(base + "inv a b\ninv b 1\nend\n") == 11);
  CHECK(error_text(base + "end\n").find("non-involutive") != std::string::npos);
}

TEST_CASE("other poset law violations are kept in the report") {
  // identity involution on the 2-chain is not antitone
  const ParsedStructure parsed = parse(kChainHeader + "le 0 1\nbot 0\ntop 1\ninv 0 0\ninv 1 1\nend\n");
  CHECK_FALSE(parsed.structure.has_value());
  CHECK_FALSE(parsed.poset_report.holds(law::kAntitone));
}

TEST_CASE("missing imp entries are computed from the order") {
  std::string text = serialize(catalog::example2(), "e");
  std::string kept;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("imp ", 0) != 0) kept += line + "\n";
  }
  const ParsedStructure parsed = parse(kept);
  REQUIRE(parsed.structure.has_value());
  CHECK(std::get<UnsharpResiduatedStructure>(*parsed.structure) == catalog::example2());
}

TEST_CASE("derived-imp cross-checks listed entries") {
  const std::string text = serialize(fixtures::example2_imp_tampered(), "e");
  CHECK_NOTHROW(parse(text));
  std::string header = "structure urp e derived-imp";
  std::string derived = text;
  derived.replace(0, derived.find('\n'), header);
  const std::string what = error_text(derived);
  CHECK(what.find("imp a a") != std::string::npos);

  const std::string ok = serialize(catalog::example2(), "e");
  std::string ok_derived = ok;
  ok_derived.replace(0, ok_derived.find('\n'), header);
  CHECK_NOTHROW(parse(ok_derived));
  CHECK_THROWS_AS(parse("structure omp e derived-imp\nend\n"), ParseError);
}

TEST_CASE("odot entries get their commutative closure") {
  const ParsedStructure parsed = parse(read_file(fixtures::data_path("example2.urp")));
  const auto& s = std::get<UnsharpResiduatedStructure>(*parsed.structure);
  for (ElementId x = 0; x < 6; ++x) {
    for (ElementId y = 0; y < 6; ++y) CHECK(s.odot().at(x, y) == s.odot().at(y, x));
  }
}
