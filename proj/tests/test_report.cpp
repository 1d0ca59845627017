// Instance configs, the JSON report document and the SVG figure: parsing
// with strict keys, determinism byte for byte, printed decimals staying
// within 1e-6 of their exact surds, and the drawn quadrant contents.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "ruledwalls/report.hpp"

using namespace ruledwalls;

namespace {

const char* kProductConfig = R"(# product threefold, level-1 family
c1p = 0
c2p = 0
split = 0 0
b = 1
variant = A
polarization = 1 3
polarization = 1 5
polarization = 1 9
a_max = 10
b_max = 100
t_max = 10
alpha_max = 4
)";

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

// Parses a fixed-point decimal string into an exact rational.
Rational decimal_to_rational(const std::string& s) {
  const bool negative = !s.empty() && s[0] == '-';
  const std::string body = negative ? s.substr(1) : s;
  const std::size_t dot = body.find('.');
  const std::string digits =
      dot == std::string::npos ? body : body.substr(0, dot) + body.substr(dot + 1);
  const std::size_t places = dot == std::string::npos ? 0 : body.size() - dot - 1;
  Int den(1);
  for (std::size_t i = 0; i < places; ++i) den *= 10;
  const Int num(digits, 10);
  return Rational(negative ? Int(-num) : num, den);
}

// Every {p_num, ..., decimal} object in the document must print a decimal
// within 1e-6 of the exact surd it sits next to.
void check_decimals(const nlohmann::json& node, std::size_t& seen) {
  if (node.is_object()) {
    if (node.contains("p_num") && node.contains("decimal")) {
      const QuadraticNumber exact(
          Rational(Int(node["p_num"].get<std::string>(), 10),
                   Int(node["p_den"].get<std::string>(), 10)),
          Rational(Int(node["q_num"].get<std::string>(), 10),
                   Int(node["q_den"].get<std::string>(), 10)),
          Int(node["d"].get<std::string>(), 10));
      const Rational printed =
          decimal_to_rational(node["decimal"].get<std::string>());
      const Rational tol(Int(1), Int(1000000));
      CHECK(qn_compare(exact, QuadraticNumber(printed - tol)) >= 0);
      CHECK(qn_compare(exact, QuadraticNumber(printed + tol)) <= 0);
      ++seen;
    }
    for (const auto& [key, value] : node.items()) check_decimals(value, seen);
  } else if (node.is_array()) {
    for (const auto& value : node) check_decimals(value, seen);
  }
}

// The product-threefold fan at level 1 with a handful of classified points.
struct PlotFixture {
  RuledThreefold X = RuledThreefold::split_bundle(0, 0);
  WallFamily fam = wall_family(X, Int(1), FamilyVariant::A);
  ChamberDecomposition fan;
  std::vector<ModuliReport> reports;

  explicit PlotFixture(int markers) {
    std::vector<WallCheck> checks;
    for (long l = 0; l <= 2; ++l)
      checks.push_back(wall_check(X, xi_l(Int(l)), fam.c1, fam.c2));
    fan = build_decomposition(checks);
    for (int i = 0; i < markers; ++i)
      reports.push_back(classify_moduli(
          X, fam, DivisorClass{Int(1 + i % 4), Int(1 + i / 4 * 2)}));
  }
};

}  // namespace

TEST_CASE("config text parses into the instance, defaults included") {
  const InstanceConfig cfg = parse_config_text(kProductConfig);
  CHECK(cfg.c1p == 0);
  CHECK(cfg.c2p == 0);
  REQUIRE(cfg.split.has_value());
  CHECK(cfg.split->first == 0);
  CHECK(cfg.split->second == 0);
  CHECK(cfg.b == 1);
  CHECK(cfg.variant == FamilyVariant::A);
  REQUIRE(cfg.polarizations.size() == 3);
  CHECK(cfg.polarizations[1] == DivisorClass{Int(1), Int(5)});
  CHECK(cfg.caps.a_max == 10);
  CHECK(cfg.caps.b_max == 100);
  CHECK(cfg.t_max == 10);
  CHECK(cfg.alpha_max == 4);
  CHECK_FALSE(cfg.json_path);
  CHECK_FALSE(cfg.svg_path);

  const InstanceConfig minimal = parse_config_text("c1p=1\nc2p=0\nb=2\n");
  CHECK(minimal.caps.a_max == 10);
  CHECK(minimal.caps.b_max == 100);
  CHECK(minimal.t_max == 10);
  CHECK(minimal.alpha_max == 4);
  CHECK(minimal.variant == FamilyVariant::A);
  CHECK_FALSE(minimal.split);
  CHECK(minimal.polarizations.empty());
}

TEST_CASE("config rejects unknown keys, bad values and missing fields") {
  CHECK_THROWS_AS(parse_config_text("c1p=0\nc2p=0\nb=1\nyear=2024\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c1p=0\nc2p=0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c1p=zero\nc2p=0\nb=1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c1p=0\nc2p=0\nb=1\nvariant=C\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c1p=0\nc2p=0\nb=1\npolarization=1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("c1p=0\nc2p=0\nb=1\nno equals sign\n"),
                  std::invalid_argument);
}

TEST_CASE("split type must reproduce the configured Chern data") {
  CHECK_THROWS_AS(
      threefold_of(parse_config_text("c1p=2\nc2p=0\nsplit=1 1\nb=3\n")),
      std::invalid_argument);
  const auto X = threefold_of(parse_config_text("c1p=2\nc2p=1\nsplit=1 1\nb=3\n"));
  CHECK(X.c1p == 2);
  CHECK(X.c2p == 1);
  REQUIRE(X.split.has_value());
}

TEST_CASE("run_report validates the family level") {
  const InstanceConfig cfg = parse_config_text("c1p=1\nc2p=0\nb=1\n");
  CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
}

TEST_CASE("run_report surfaces cap truncation instead of dropping rows") {
  InstanceConfig cfg = parse_config_text(kProductConfig);
  cfg.caps.a_max = 0;
  CHECK_THROWS_AS(run_report(cfg), TruncationError);
}

TEST_CASE("report document is byte-identical across reruns and threads") {
  const InstanceConfig cfg = parse_config_text(kProductConfig);
  const std::string once = run_report(cfg, 1);
  CHECK(run_report(cfg, 1) == once);
  CHECK(run_report(cfg, 4) == once);
}

TEST_CASE("report carries the expected verdicts and structure") {
  const InstanceConfig cfg = parse_config_text(kProductConfig);
  const auto doc = nlohmann::json::parse(run_report(cfg));
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("instance").at("c1p") == "0");
  REQUIRE(doc.at("polarizations").size() == 3);
  CHECK(doc.at("polarizations")[0].at("verdict") == "complement-chamber");
  CHECK(doc.at("polarizations")[1].at("verdict") == "component-chamber");
  CHECK(doc.at("polarizations")[2].at("verdict") == "empty");
  CHECK(doc.at("verification").at("wall").at("pass") == true);
  CHECK(doc.at("verification").at("intermediate_walls").at("pass") == true);
  CHECK(doc.at("decomposition").at("pass") == true);
  CHECK(doc.at("ext1_table").at("ext1_computed") == "4");
  CHECK(doc.at("ext1_table").at("ext1_crossref") == "3");
  CHECK(doc.at("bn_range") == "3");
}

TEST_CASE("every printed decimal sits within 1e-6 of its exact surd") {
  const InstanceConfig cfg = parse_config_text(kProductConfig);
  const auto doc = nlohmann::json::parse(run_report(cfg));
  std::size_t seen = 0;
  check_decimals(doc, seen);
  CHECK(seen > 4);  // window endpoints, fan rays, wall rays at least
}

TEST_CASE("variant B reports drop the variant-A-only blocks with a note") {
  InstanceConfig cfg = parse_config_text(kProductConfig);
  cfg.variant = FamilyVariant::B;
  const auto doc = nlohmann::json::parse(run_report(cfg));
  CHECK(doc.at("decomposition").is_null());
  CHECK(doc.at("verification").at("intermediate_walls").is_null());
  CHECK(doc.at("component_dimension").is_null());
  CHECK_FALSE(doc.at("notes").empty());
}

TEST_CASE("figure draws rays, shading, markers and the legend") {
  const PlotFixture fx(3);
  REQUIRE(fx.fan.rays.size() == 2);
  const std::string svg = render_svg(fx.fan, std::size_t{0}, fx.reports);
  CHECK(count_of(svg, "<line") == 4);     // two axes + two rays
  CHECK(count_of(svg, "<polygon") == 2);  // both chambers shaded
  CHECK(count_of(svg, "<circle") == 3 + 5);  // markers + legend swatches
  for (const auto& ray : fx.fan.rays) {
    CHECK(svg.find(ray.walls.front().xi.str()) != std::string::npos);
    CHECK(svg.find(ray.slope.decimal(6)) != std::string::npos);
  }
  CHECK(svg.find("alpha (S coefficient)") != std::string::npos);
  CHECK(svg.find("component chamber") != std::string::npos);
}

TEST_CASE("figure with no walls is the bare quadrant") {
  const std::string svg = render_svg(ChamberDecomposition{}, std::nullopt, {});
  CHECK(count_of(svg, "<line") == 2);
  CHECK(count_of(svg, "<polygon") == 0);
  CHECK(count_of(svg, "<circle") == 5);  // legend swatches only
}

TEST_CASE("twenty polarizations give twenty markers") {
  const PlotFixture fx(20);
  const std::string svg = render_svg(fx.fan, std::size_t{0}, fx.reports);
  CHECK(count_of(svg, "<circle") == 20 + 5);
}
