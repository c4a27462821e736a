#include <doctest.h>

#include <fstream>
#include <random>

#include "support/test_support.hpp"
#include "umf/errors.hpp"
#include "umf/profile.hpp"

using namespace umf;
using namespace umf::test;

TEST_SUITE("profile") {

TEST_CASE("shipped english profile loads with the published values") {
  const LanguageProfile& en = english();
  CHECK(en.language_code == "en");
  CHECK(std::get<Categorical>(en.dimension(DimensionId::word_order).value).label == "SVO");
  CHECK(std::get<Numeric>(en.dimension(DimensionId::case_marking).value).value == 0.1);
  CHECK(validate_profile(en).empty());
}

TEST_CASE("shipped sinhala profile loads with the published values") {
  const LanguageProfile& si = sinhala();
  CHECK(si.language_code == "si");
  CHECK(std::get<Categorical>(si.dimension(DimensionId::word_order).value).label == "SOV");
  CHECK(std::get<Numeric>(si.dimension(DimensionId::case_marking).value).value == 0.9);
  CHECK(validate_profile(si).empty());
}

TEST_CASE("missing dimension is a SchemaError naming it") {
  Json doc = profile_to_json(english());
  doc["dimensions"].erase("negation");
  CHECK_THROWS_WITH_AS(parse_profile(doc), doctest::Contains("negation"), SchemaError);
}

TEST_CASE("unknown fields are rejected, not ignored") {
  Json doc = profile_to_json(english());
  SUBCASE("top level") { doc["extra"] = 1; }
  SUBCASE("dimension object") { doc["dimensions"]["tam"]["extra"] = 1; }
  SUBCASE("unknown dimension id") { doc["dimensions"]["tone"] = doc["dimensions"]["tam"]; }
  SUBCASE("unknown marker role") {
    doc["dimensions"]["tam"]["markers"]["mystery_markers"] = Json::array({"x"});
  }
  CHECK_THROWS_AS(parse_profile(doc), SchemaError);
}

TEST_CASE("weight defaults fill in from the shipped weight set") {
  Json doc = profile_to_json(english());
  doc["dimensions"]["word_order"].erase("weight");
  doc["dimensions"]["copula"].erase("weight");
  const LanguageProfile p = parse_profile(doc);
  CHECK(p.dimension(DimensionId::word_order).weight == 1.2);
  CHECK(p.dimension(DimensionId::copula).weight == 0.5);
}

TEST_CASE("validate_profile reports range and weight violations") {
  LanguageProfile p = english();
  SUBCASE("numeric out of range") {
    at(p.dimensions, DimensionId::case_marking).value = Numeric{1.3};
    const auto violations = validate_profile(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].dimension == DimensionId::case_marking);
  }
  SUBCASE("zero weight") {
    at(p.dimensions, DimensionId::morphology).weight = 0.0;
    const auto violations = validate_profile(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].dimension == DimensionId::morphology);
  }
  SUBCASE("tam composite shape") {
    at(p.dimensions, DimensionId::tam).value =
        Composite{{{"tense", 0.5}, {"aspect", 0.5}}};
    const auto violations = validate_profile(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].dimension == DimensionId::tam);
  }
  SUBCASE("bad word order label") {
    at(p.dimensions, DimensionId::word_order).value = Categorical{"SVV"};
    const auto violations = validate_profile(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].dimension == DimensionId::word_order);
  }
  SUBCASE("empty marker string") {
    at(p.dimensions, DimensionId::negation).markers.negation_markers.push_back("  ");
    const auto violations = validate_profile(p);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].dimension == DimensionId::negation);
  }
}

TEST_CASE("serialize/parse round trip is field-for-field identical") {
  auto check_round_trip = [](const LanguageProfile& p) {
    const LanguageProfile q = parse_profile(profile_to_json(p));
    CHECK(profile_to_json(q) == profile_to_json(p));
    CHECK(q.language_code == p.language_code);
    for (const DimensionId id : all_dimensions()) {
      CHECK(q.dimension(id).weight == p.dimension(id).weight);
      CHECK(q.dimension(id).value == p.dimension(id).value);
    }
  };
  check_round_trip(english());
  check_round_trip(sinhala());

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto [a, b] = random_profile_pair(rng);
    check_round_trip(a);
    check_round_trip(b);
  }
}

TEST_CASE("malformed JSON is a ParseError") {
  const auto path = std::filesystem::temp_directory_path() / "umf_bad_profile.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_profile(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("weight override file replaces selected weights") {
  const auto path = std::filesystem::temp_directory_path() / "umf_weights.json";
  {
    std::ofstream out(path);
    out << R"({"word_order": 2.0, "copula": 0.25})";
  }
  const auto w = load_weight_overrides(path, profile_weights(sinhala()));
  CHECK(at(w, DimensionId::word_order) == 2.0);
  CHECK(at(w, DimensionId::copula) == 0.25);
  CHECK(at(w, DimensionId::case_marking) == 1.0);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
