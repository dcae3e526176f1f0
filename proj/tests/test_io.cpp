#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "phopf/io.hpp"

using namespace phopf;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("fixture files are canonical") {
  for (const auto& [name, f] : fx::fixture_files()) {
    CAPTURE(name);
    std::string text = slurp(std::string(PHOPF_FIXTURE_DIR) + "/" + name);
    CHECK(text == dump_fixture(f));
    auto back = parse_fixture(text);
    CHECK(back == f);
    CHECK(dump_fixture(back) == text);
  }
}

TEST_CASE("loaded fixtures hold the library objects") {
  auto e1 = load(std::string(PHOPF_FIXTURE_DIR) + "/e1.json");
  CHECK(e1.main() == "e1");
  CHECK(e1.get<PartialAction>("e1").act == fx::e1().act);
  CHECK(e1.get<HopfPackage>("kZ2") == fx::kz2());
  CHECK(e1.names_of("partial-action") == std::vector<std::string>{"e1"});
  CHECK_THROWS_AS(e1.get<AlgebraSC>("e1"), SchemaError);

  auto e3s = load(std::string(PHOPF_FIXTURE_DIR) + "/e3star.json");
  CHECK(e3s.get<PartialComoduleCoalgebra>("e3star").lam == fx::e3star().lam);

  CHECK_THROWS_AS(load("/nonexistent/phopf.json"), Error);
}

TEST_CASE("objects of every kind survive a round trip") {
  FixtureFile f;
  f.add("swap", fx::swap_set());
  f.add("groupoid", groupoid_of_action(fx::e1set()));
  f.add("split", partial_split_hopf_algebroid(fx::e2()));
  f.add("e3", fx::e3());
  f.add("cring", cring(fx::e3()));
  RightPartialAction ra{fx::kz2(), fx::fun2(), fx::e1().act};
  f.add("right", ra);
  auto back = parse_fixture(dump_fixture(f));
  CHECK(back == f);
  CHECK(back.get<SetPartialAction>("swap") == fx::swap_set());
  CHECK(back.get<FiniteGroupoid>("groupoid").arrow_count() == 3);
  auto h = back.get<HopfAlgebroid>("split");
  CHECK(h.s_l == partial_split_hopf_algebroid(fx::e2()).s_l);
  CHECK(back.get<CRing>("cring").dim() == 3);
  // Shared constituents are stored once.
  CHECK(back.at("e3").refs.at("hopf") == back.at("right").refs.at("hopf"));
}

TEST_CASE("schema errors name the line and field") {
  std::string text = slurp(std::string(PHOPF_FIXTURE_DIR) + "/e1.json");
  auto bad = replace(text, "[1, 1, 1, \"1\"]", "[1, 1, 1, \"1/0\"]");
  try {
    parse_fixture(bad);
    FAIL("no error");
  } catch (const SchemaError& e) {
    std::string what = e.what();
    CHECK(what.find("line ") != std::string::npos);
    CHECK(what.find("objects.A.products[1][3]") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_fixture(replace(text, "\"hopf\": \"kZ2\"", "\"hopf\": \"kZ9\"")), UnresolvedReference);
  CHECK_THROWS_AS(parse_fixture(replace(text, "phopf-fixture/1", "phopf-fixture/9")), SchemaError);
  CHECK_THROWS_AS(parse_fixture(replace(text, "\"shape\": [2, 4]", "\"shape\": [2, 5]")), SchemaError);
  CHECK_THROWS_AS(parse_fixture("{"), SchemaError);
  CHECK_THROWS_AS(parse_fixture(replace(text, "[0, 2, \"1\"]", "[0, 9, \"1\"]")), SchemaError);
}

TEST_CASE("field override") {
  std::string text = slurp(std::string(PHOPF_FIXTURE_DIR) + "/e1.json");
  Field f3 = Field::prime(3);
  auto f = parse_fixture(text, &f3);
  CHECK(f.field() == f3);
  const auto& pa = f.get<PartialAction>("e1");
  CHECK(pa.act(0, 0).field() == f3);
  CHECK(check_partial_action(pa).passed());
  CHECK(dump_fixture(f).find("\"field\": \"Fp:3\"") != std::string::npos);

  // 1/3 has no meaning in 𝔽₃.
  Field q;
  auto frac = replace(text, "[0, 2, \"1\"]", "[0, 2, \"1/3\"]");
  CHECK_NOTHROW(parse_fixture(frac, &q));
  CHECK_THROWS_AS(parse_fixture(frac, &f3), SchemaError);
}

TEST_CASE("merging fixtures") {
  auto files = fx::fixture_files();
  FixtureFile into = files.at("e1.json");
  merge(into, files.at("e2.json"));
  CHECK(into.contains("e1"));
  CHECK(into.contains("e2"));
  CHECK(into.contains("form"));
  merge(into, files.at("e1.json"));

  FixtureFile clash;
  clash.add("kZ2", fx::kz2_dual());
  CHECK_THROWS_AS(merge(into, clash), SchemaError);

  FixtureFile other(Field::prime(5));
  CHECK_THROWS_AS(merge(into, other), FieldMismatch);
}

TEST_CASE("reports round trip through JSON") {
  std::vector<Report> reps{check_partial_action(fx::broken_e1()), check_partial_coaction(fx::e2())};
  std::string json = report_to_json(reps);
  auto back = parse_report(json);
  REQUIRE(back.size() == 2);
  CHECK(report_to_json(back) == json);
  CHECK(report_to_text(back) == report_to_text(reps));
  CHECK_FALSE(back[0].passed());
  CHECK(back[0].find("PLA3")->has_witness({1, 1, 0}));
  CHECK(back[1].flag("symmetric"));

  std::string text = report_to_text(reps);
  CHECK(text.find("== partial action: FAIL") != std::string::npos);
  CHECK(text.find("(δ_g,δ_g,χ1)") != std::string::npos);
  CHECK_THROWS_AS(parse_report("{\"schema\": \"phopf-fixture/1\"}"), SchemaError);
}
