#include "mg/feature.hpp"

#include <cctype>

#include "mg/errors.hpp"

namespace mg {

Feature cat(std::string base) {
  return {FeatureKind::Cat, std::move(base), HeadMove::None, Strength::Strong};
}

Feature sel(std::string base, HeadMove headmove) {
  return {FeatureKind::Sel, std::move(base), headmove, Strength::Strong};
}

Feature lic_plus(std::string base, Strength strength) {
  return {FeatureKind::LicPlus, std::move(base), HeadMove::None, strength};
}

Feature lic_minus(std::string base) {
  return {FeatureKind::LicMinus, std::move(base), HeadMove::None,
          Strength::Strong};
}

std::string normalize_base(std::string_view raw) {
  std::string base;
  base.reserve(raw.size());
  for (unsigned char c : raw) base += static_cast<char>(std::tolower(c));
  if (base == "acc3") base = "acc";
  return base;
}

namespace {

bool valid_base(std::string_view base) {
  if (base.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(base[0]))) return false;
  for (unsigned char c : base)
    if (!std::isalnum(c) && c != '_') return false;
  return true;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw SyntaxError("malformed feature token '" + std::string(token) + "'",
                    "");
}

}  // namespace

Feature parse_feature(std::string_view token) {
  if (token.empty()) bad_token(token);

  FeatureKind kind = FeatureKind::Cat;
  HeadMove headmove = HeadMove::None;
  Strength strength = Strength::Strong;
  std::string_view raw = token;

  if (token.rfind("=>", 0) == 0) {
    kind = FeatureKind::Sel;
    headmove = HeadMove::Left;
    raw = token.substr(2);
  } else if (token.size() >= 2 &&
             token.substr(token.size() - 2) == "<=") {
    kind = FeatureKind::Sel;
    headmove = HeadMove::Right;
    raw = token.substr(0, token.size() - 2);
  } else if (token[0] == '=') {
    kind = FeatureKind::Sel;
    raw = token.substr(1);
  } else if (token[0] == '+') {
    kind = FeatureKind::LicPlus;
    strength = Strength::Strong;
    raw = token.substr(1);
  } else if (token[0] == '*') {
    kind = FeatureKind::LicPlus;
    strength = Strength::Weak;
    raw = token.substr(1);
  } else if (token[0] == '-') {
    kind = FeatureKind::LicMinus;
    raw = token.substr(1);
  }

  std::string base = normalize_base(raw);
  if (!valid_base(base)) bad_token(token);
  return {kind, std::move(base), headmove, strength};
}

std::vector<Feature> parse_feature_sequence(std::string_view text) {
  std::vector<Feature> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    out.push_back(parse_feature(text.substr(start, i - start)));
  }
  return out;
}

std::string to_string(const Feature& f) {
  switch (f.kind) {
    case FeatureKind::Cat:
      return f.base;
    case FeatureKind::Sel:
      switch (f.headmove) {
        case HeadMove::None:
          return "=" + f.base;
        case HeadMove::Left:
          return "=>" + f.base;
        case HeadMove::Right:
          return f.base + "<=";
      }
      break;
    case FeatureKind::LicPlus:
      return (f.strength == Strength::Strong ? "+" : "*") + f.base;
    case FeatureKind::LicMinus:
      return "-" + f.base;
  }
  return f.base;  // unreachable
}

std::string to_string(const std::vector<Feature>& features) {
  std::string out;
  for (const Feature& f : features) {
    if (!out.empty()) out += ' ';
    out += to_string(f);
  }
  return out;
}

}  // namespace mg
