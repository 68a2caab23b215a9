#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "mg/errors.hpp"
#include "mg/feature.hpp"

using namespace mg;

TEST_CASE("parse_feature maps every surface form") {
  CHECK(parse_feature("=v") == sel("v"));
  CHECK(parse_feature("=>v") == sel("v", HeadMove::Left));
  CHECK(parse_feature("clitic<=") == sel("clitic", HeadMove::Right));
  CHECK(parse_feature("+G") == lic_plus("g", Strength::Strong));
  CHECK(parse_feature("*disloc") == lic_plus("disloc", Strength::Weak));
  CHECK(parse_feature("-k") == lic_minus("k"));
  CHECK(parse_feature("x") == cat("x"));
  CHECK(parse_feature("raisingv") == cat("raisingv"));
}

TEST_CASE("bases are case-folded and aliased") {
  CHECK(parse_feature("D") == cat("d"));
  CHECK(parse_feature("=V") == sel("v"));
  CHECK(parse_feature("Acc3") == cat("acc"));
  CHECK(parse_feature("acc3") == cat("acc"));
  CHECK(parse_feature("+EN") == lic_plus("en"));
  CHECK(parse_feature("-Subj") == lic_minus("subj"));
  CHECK(normalize_base("Acc3") == "acc");
  CHECK(normalize_base("DISLOC") == "disloc");
}

TEST_CASE("malformed feature tokens are rejected") {
  CHECK_THROWS_AS(parse_feature(""), SyntaxError);
  CHECK_THROWS_AS(parse_feature("="), SyntaxError);
  CHECK_THROWS_AS(parse_feature("=+x"), SyntaxError);
  CHECK_THROWS_AS(parse_feature("+-x"), SyntaxError);
  CHECK_THROWS_AS(parse_feature("<="), SyntaxError);
  CHECK_THROWS_AS(parse_feature("3x"), SyntaxError);
  CHECK_THROWS_AS(parse_feature("x="), SyntaxError);
}

TEST_CASE("print/parse round-trip over the whole alphabet") {
  std::vector<std::string> bases = {"v",   "d",     "t",      "c",   "acc",
                                    "dat", "clitic", "genitif", "nom", "k",
                                    "g",   "en",    "disloc",  "p"};
  std::vector<Feature> all;
  for (const auto& b : bases) {
    all.push_back(cat(b));
    all.push_back(sel(b, HeadMove::None));
    all.push_back(sel(b, HeadMove::Left));
    all.push_back(sel(b, HeadMove::Right));
    all.push_back(lic_plus(b, Strength::Strong));
    all.push_back(lic_plus(b, Strength::Weak));
    all.push_back(lic_minus(b));
  }
  for (const Feature& f : all) {
    CAPTURE(to_string(f));
    CHECK(parse_feature(to_string(f)) == f);
  }
}

TEST_CASE("feature sequences parse and print") {
  auto seq = parse_feature_sequence("=>v =d +k =d v");
  REQUIRE(seq.size() == 5);
  CHECK(seq[0] == sel("v", HeadMove::Left));
  CHECK(seq[1] == sel("d"));
  CHECK(seq[2] == lic_plus("k"));
  CHECK(seq[3] == sel("d"));
  CHECK(seq[4] == cat("v"));
  CHECK(to_string(seq) == "=>v =d +k =d v");

  CHECK(parse_feature_sequence("").empty());
  CHECK(to_string(parse_feature_sequence("dat<= +G acc")) == "dat<= +g acc");
}
