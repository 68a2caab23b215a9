#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mg/derivation.hpp"
#include "mg/lexicon.hpp"

namespace mg {

// Lowercases ASCII letters, makes each comma its own token, and splits
// after apostrophes ("l'ai" → "l'", "ai").  Multi-byte characters pass
// through untouched.
std::vector<std::string> tokenize(const std::string& sentence);

struct ParseConfig {
  std::size_t max_epsilon_items = 8;  // silent leaves per derivation
  std::size_t max_leaves = 24;        // total leaves per derivation
  std::size_t max_states = 2000000;   // chart size safety bound
  double timeout_seconds = 60.0;
};

struct ParseStatistics {
  std::size_t expansions = 0;           // states admitted to the chart
  std::size_t smc_prunes = 0;           // merge/move blocked by the SMC
  std::size_t category_mismatches = 0;  // failed merge attempts
};

struct ParseResult {
  std::vector<DerivationTreePtr> derivations;  // sorted by derivation_key
  ParseStatistics statistics;
};

struct OutOfVocabularyError : std::runtime_error {
  explicit OutOfVocabularyError(const std::string& tok)
      : std::runtime_error("out-of-vocabulary token: " + tok), token(tok) {}
  std::string token;
};

struct SearchLimitError : std::runtime_error {
  SearchLimitError(const std::string& what, ParseStatistics stats)
      : std::runtime_error(what), statistics(stats) {}
  ParseStatistics statistics;
};

// One candidate use of an overt item at a sentence position.
struct Anchor {
  const LexicalItem* item;
  std::size_t position;  // index of the item's first token
};

// Every (item, position) whose surface tokens match the sentence
// contiguously.  Throws OutOfVocabularyError if some token is covered by
// no anchor at all.
std::vector<Anchor> anchor_tokens(const std::vector<std::string>& tokens,
                                  const Lexicon& lex);

// Exhaustive bottom-up search for complete derivations whose yield is
// exactly `tokens`.  Deterministic: results are sorted by derivation_key.
ParseResult parse(const std::vector<std::string>& tokens, const Lexicon& lex,
                  const ParseConfig& cfg = {});

struct Generated {
  std::vector<std::string> sentence;
  DerivationTreePtr tree;
};

// Every complete derivation with at most max_leaves leaves, enumerated
// without anchoring; sorted by derivation_key.
std::vector<Generated> generate(const Lexicon& lex, std::size_t max_leaves,
                                const ParseConfig& cfg = {});

}  // namespace mg
