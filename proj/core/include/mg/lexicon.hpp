#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mg/feature.hpp"
#include "mg/lambda.hpp"

namespace mg {

// One lexicon entry: surface form (possibly empty), ordered feature
// sequence, optional semantic term.  Well-shaped items carry exactly one
// Cat feature, licensees only after it, selectors/licensors only before it;
// shape violations are reported by lint_lexicon, not rejected at parse.
struct LexicalItem {
  std::vector<std::string> phon;  // empty = ε
  std::vector<Feature> features;  // non-empty
  TermPtr sem;                    // may be null
  std::string id;                 // stable, unique within a lexicon

  bool is_epsilon() const { return phon.empty(); }
  std::string phon_string() const;  // tokens joined by spaces; "ε" if empty

  // Index of the (first) Cat feature, if any.
  std::optional<std::size_t> cat_index() const;
  const Feature* cat_feature() const;

  // Shape invariant described above.
  bool well_shaped() const;
};

struct Lexicon {
  std::vector<LexicalItem> items;
  std::set<std::string> category_alphabet;  // every base mentioned anywhere
  std::vector<std::string> warnings;        // e.g. duplicate entries collapsed
};

// Line format: `phon :: feat feat ... [:: lambda-term]`.
//   - `#` starts a comment
//   - phon `ε` (or an empty field) denotes the empty form; multi-token
//     forms are whitespace-separated ("ce type")
//   - ASCII letters in phon are case-folded
// Identical duplicate entries are collapsed with a warning.  Malformed
// lines raise SyntaxError tagged with the line number.
Lexicon parse_lexicon(const std::string& text);
Lexicon load_lexicon_file(const std::string& path);

struct LintFinding {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
};

// Checks (a) item shape, (b) clitic-state entries against the forward-only
// cliticization order, (c) dangling references: selectors nobody can
// satisfy, categories nobody selects, unpaired licensors/licensees.
std::vector<LintFinding> lint_lexicon(const Lexicon& lex);

std::string format_lint_report(const std::vector<LintFinding>& findings);

}  // namespace mg
