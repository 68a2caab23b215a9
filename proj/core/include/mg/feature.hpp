#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mg {

// Feature alphabet of the grammar.  A lexical item carries an ordered
// sequence of these; merge and move consume them front-to-back.
//
//   x        Cat       categorial feature
//   =x       Sel       plain selector
//   =>x      Sel       selector with head attraction, attracted head lands
//                      to the LEFT of the selecting head
//   x<=      Sel       selector with head attraction, attracted head lands
//                      to the RIGHT of the selecting head
//   +f       Lic+      strong licensor (movement lands overtly)
//   *f       Lic+      weak licensor (phonology stays in situ)
//   -f       Lic-      licensee
//
// Bases are case-folded to lowercase; "acc3" is an alias of "acc".

enum class FeatureKind { Cat, Sel, LicPlus, LicMinus };
enum class HeadMove { None, Left, Right };  // Sel only
enum class Strength { Strong, Weak };       // Lic+ only

struct Feature {
  FeatureKind kind = FeatureKind::Cat;
  std::string base;
  HeadMove headmove = HeadMove::None;
  Strength strength = Strength::Strong;

  bool operator==(const Feature&) const = default;
};

Feature cat(std::string base);
Feature sel(std::string base, HeadMove headmove = HeadMove::None);
Feature lic_plus(std::string base, Strength strength = Strength::Strong);
Feature lic_minus(std::string base);

// Case-folds ASCII letters and applies base aliases.
std::string normalize_base(std::string_view raw);

// One feature token, e.g. "=>v", "clitic<=", "+G", "*disloc", "-k", "acc3".
// Throws SyntaxError on malformed tokens.
Feature parse_feature(std::string_view token);

// Whitespace-separated feature tokens.
std::vector<Feature> parse_feature_sequence(std::string_view text);

std::string to_string(const Feature& f);
std::string to_string(const std::vector<Feature>& features);

}  // namespace mg
