#include "mg/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "mg/clitic_order.hpp"
#include "mg/errors.hpp"

namespace mg {

std::string LexicalItem::phon_string() const {
  if (phon.empty()) return "\xce\xb5";  // ε
  std::string out;
  for (const auto& t : phon) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::optional<std::size_t> LexicalItem::cat_index() const {
  for (std::size_t i = 0; i < features.size(); ++i)
    if (features[i].kind == FeatureKind::Cat) return i;
  return std::nullopt;
}

const Feature* LexicalItem::cat_feature() const {
  auto i = cat_index();
  return i ? &features[*i] : nullptr;
}

bool LexicalItem::well_shaped() const {
  if (features.empty()) return false;
  std::size_t cats = 0, cat_at = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].kind == FeatureKind::Cat) {
      ++cats;
      cat_at = i;
    }
  }
  if (cats != 1) return false;
  for (std::size_t i = 0; i < cat_at; ++i)
    if (features[i].kind != FeatureKind::Sel &&
        features[i].kind != FeatureKind::LicPlus)
      return false;
  for (std::size_t i = cat_at + 1; i < features.size(); ++i)
    if (features[i].kind != FeatureKind::LicMinus) return false;
  return true;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string fold_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_on(const std::string& line,
                                  const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t at = 0;
  for (;;) {
    std::size_t next = line.find(sep, at);
    if (next == std::string::npos) {
      parts.push_back(line.substr(at));
      return parts;
    }
    parts.push_back(line.substr(at, next - at));
    at = next + sep.size();
  }
}

std::vector<std::string> phon_tokens(const std::string& field) {
  std::string t = trim(field);
  if (t.empty() || t == "\xce\xb5") return {};
  std::vector<std::string> tokens;
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) tokens.push_back(fold_ascii(tok));
  return tokens;
}

bool same_entry(const LexicalItem& a, const LexicalItem& b) {
  if (a.phon != b.phon || a.features != b.features) return false;
  if (!a.sem && !b.sem) return true;
  if (!a.sem || !b.sem) return false;
  return alpha_equal(a.sem, b.sem);
}

}  // namespace

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, int> id_uses;

  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno);
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    std::vector<std::string> parts = split_on(line, "::");
    if (parts.size() < 2 || parts.size() > 3)
      throw SyntaxError("expected `phon :: features [:: term]`", where);

    LexicalItem item;
    item.phon = phon_tokens(parts[0]);
    try {
      item.features = parse_feature_sequence(parts[1]);
      if (parts.size() == 3 && !trim(parts[2]).empty())
        item.sem = parse_lambda_term(parts[2]);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), where);
    }
    if (item.features.empty())
      throw SyntaxError("entry has no features", where);

    bool duplicate = false;
    for (const auto& existing : lex.items) {
      if (same_entry(existing, item)) {
        lex.warnings.push_back("duplicate entry collapsed at " + where + ": " +
                               existing.id);
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    std::string base_id = item.phon_string() + ":" + to_string(item.features);
    int& uses = id_uses[base_id];
    ++uses;
    item.id = uses == 1 ? base_id : base_id + "~" + std::to_string(uses);

    for (const Feature& f : item.features) lex.category_alphabet.insert(f.base);
    lex.items.push_back(std::move(item));
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open lexicon file: " + path, "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

std::vector<LintFinding> lint_lexicon(const Lexicon& lex) {
  std::vector<LintFinding> out;
  auto error = [&](std::string m) {
    out.push_back({LintFinding::Severity::Error, std::move(m)});
  };
  auto warning = [&](std::string m) {
    out.push_back({LintFinding::Severity::Warning, std::move(m)});
  };

  std::set<std::string> produced, selected, licensors, licensees;
  for (const auto& item : lex.items) {
    for (const Feature& f : item.features) {
      switch (f.kind) {
        case FeatureKind::Cat:
          produced.insert(f.base);
          break;
        case FeatureKind::Sel:
          selected.insert(f.base);
          break;
        case FeatureKind::LicPlus:
          licensors.insert(f.base);
          break;
        case FeatureKind::LicMinus:
          licensees.insert(f.base);
          break;
      }
    }
  }

  for (const auto& item : lex.items) {
    if (!item.well_shaped())
      error("item " + item.id +
            ": malformed feature sequence (need selectors/licensors, then one "
            "category, then licensees)");

    // Clitic state machine: an entry consuming one clitic state and
    // producing another must walk forward.
    const Feature* cat = item.cat_feature();
    if (!item.features.empty() && item.features.front().kind == FeatureKind::Sel &&
        cat && is_clitic_state(item.features.front().base) &&
        is_clitic_state(cat->base)) {
      if (!clitic_edge_allowed(item.features.front().base, cat->base))
        error("item " + item.id + ": backward cliticization edge " +
              item.features.front().base + " -> " + cat->base);
    }
  }

  for (const auto& base : selected)
    if (!produced.count(base))
      warning("selector =" + base + " can never be satisfied (no item of "
              "category " + base + ")");
  for (const auto& base : produced)
    if (base != "c" && !selected.count(base))
      warning("category " + base + " is never selected");
  for (const auto& base : licensors)
    if (!licensees.count(base))
      warning("licensor +" + base + " has no matching licensee");
  for (const auto& base : licensees)
    if (!licensors.count(base))
      warning("licensee -" + base + " has no matching licensor");

  return out;
}

std::string format_lint_report(const std::vector<LintFinding>& findings) {
  std::string out;
  std::size_t errors = 0, warnings = 0;
  for (const auto& f : findings) {
    bool is_error = f.severity == LintFinding::Severity::Error;
    (is_error ? errors : warnings) += 1;
    out += is_error ? "error: " : "warning: ";
    out += f.message;
    out += '\n';
  }
  out += std::to_string(errors) + " error(s), " + std::to_string(warnings) +
         " warning(s)\n";
  return out;
}

}  // namespace mg
