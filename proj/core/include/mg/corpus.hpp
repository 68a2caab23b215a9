#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mg/lexicon.hpp"
#include "mg/parser.hpp"

namespace mg {

// One regression expectation: whether the sentence should parse and, for
// accepted sentences, which formula some derivation should compose to.
struct CorpusEntry {
  std::string sentence;
  bool accept = true;
  std::optional<std::string> expected_formula;  // only with accept
  std::vector<std::string> tags;
  int line = 0;  // 1-based line in the corpus file
};

// Outcome of running one entry against a lexicon.
struct CorpusResult {
  CorpusEntry entry;
  bool passed = false;
  std::size_t derivations = 0;
  std::string detail;  // reason when failed, empty when passed
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0; }
};

// Parses corpus text.  Entry lines look like
//
//   expect accept [raising] :: Je semble la réparer :: pres(seem(I, ...))
//
// i.e. `expect <accept|reject>`, an optional bracketed comma-separated tag
// list, `::`, the sentence, and optionally `::` plus the expected formula
// (accept entries only).  `#` starts a comment; blank lines are skipped.
// Throws SyntaxError naming the line on malformed input, including formulas
// that do not parse as lambda terms.
std::vector<CorpusEntry> parse_corpus(const std::string& text);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

// Runs every entry: a reject entry passes when the sentence has no
// derivation; an accept entry needs at least one, and when a formula is
// given, at least one derivation must compose to an alpha-equal term.
// Parser errors (out-of-vocabulary words, exhausted bounds) fail the entry
// rather than counting as rejection.
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const Lexicon& lexicon, const ParseConfig& cfg = {});

// One PASS/FAIL line per entry (echoing the entry and, on failure, the
// reason) followed by a summary line.  Deterministic for a given report.
std::string render_report(const CorpusReport& report);

}  // namespace mg
