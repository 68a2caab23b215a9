#include "mg/parser.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <unordered_set>

namespace mg {

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : sentence) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == ',') {
      flush();
      out.emplace_back(",");
    } else if (c == '\'') {
      cur.push_back(c);
      flush();
    } else {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::vector<Anchor> anchor_tokens(const std::vector<std::string>& tokens,
                                  const Lexicon& lex) {
  std::vector<Anchor> anchors;
  std::vector<bool> covered(tokens.size(), false);
  for (const auto& item : lex.items) {
    if (item.is_epsilon()) continue;
    const auto& phon = item.phon;
    if (phon.size() > tokens.size()) continue;
    for (std::size_t pos = 0; pos + phon.size() <= tokens.size(); ++pos) {
      bool match = true;
      for (std::size_t i = 0; i < phon.size() && match; ++i)
        match = phon[i] == tokens[pos + i];
      if (!match) continue;
      anchors.push_back({&item, pos});
      for (std::size_t i = 0; i < phon.size(); ++i) covered[pos + i] = true;
    }
  }
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (!covered[i]) throw OutOfVocabularyError(tokens[i]);
  return anchors;
}

namespace {

using Clock = std::chrono::steady_clock;

struct State {
  DerivationTreePtr tree;
  std::uint64_t mask = 0;
};

struct Search {
  const ParseConfig& cfg;
  ParseStatistics stats;
  Clock::time_point deadline;
  std::deque<State> agenda;
  std::vector<State> chart;
  // Anchored search can reach one (structure, coverage) state through
  // different splits when a token repeats; unanchored search cannot, so
  // generate() skips the key bookkeeping.
  bool dedup = true;
  std::unordered_set<std::string> seen;
  // States indexed by their head feature, so only pairings whose fronts can
  // merge are attempted.
  std::map<std::string, std::vector<State>> sel_by_base, cat_by_base;

  explicit Search(const ParseConfig& c)
      : cfg(c),
        deadline(Clock::now() +
                 std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(c.timeout_seconds))) {}

  void check_limits() {
    if (stats.expansions > cfg.max_states)
      throw SearchLimitError("state bound exceeded", stats);
    if (stats.expansions % 64 == 0 && Clock::now() > deadline)
      throw SearchLimitError("timeout exceeded", stats);
  }

  // Applies move until the head feature is no longer a licensor.  Returns
  // nullptr if the derivation is stuck.
  DerivationTreePtr move_closure(DerivationTreePtr t) {
    while (t && !t->expr.features.empty() &&
           t->expr.features.front().kind == FeatureKind::LicPlus) {
      auto r = move_tree(t);
      if (auto* fail = std::get_if<RuleFailure>(&r)) {
        if (*fail == RuleFailure::SmcViolation) ++stats.smc_prunes;
        return nullptr;
      }
      t = std::get<DerivationTreePtr>(r);
    }
    return t;
  }

  void enqueue(DerivationTreePtr tree, std::uint64_t mask) {
    tree = move_closure(std::move(tree));
    if (!tree) return;
    if (dedup) {
      std::string key = derivation_key(tree) + '|' + std::to_string(mask);
      if (!seen.insert(std::move(key)).second) return;
    }
    ++stats.expansions;
    check_limits();
    agenda.push_back({std::move(tree), mask});
  }

  void combine(const State& sel, const State& arg) {
    if (sel.mask & arg.mask) return;
    if (sel.tree->leaves + arg.tree->leaves > cfg.max_leaves) return;
    if (sel.tree->epsilon_leaves + arg.tree->epsilon_leaves >
        cfg.max_epsilon_items)
      return;
    auto r = merge_trees(sel.tree, arg.tree);
    if (auto* fail = std::get_if<RuleFailure>(&r)) {
      // Fronts were pre-matched, so only the SMC can reject here.
      if (*fail == RuleFailure::SmcViolation) ++stats.smc_prunes;
      return;
    }
    enqueue(std::get<DerivationTreePtr>(std::move(r)), sel.mask | arg.mask);
  }

  void run() {
    while (!agenda.empty()) {
      State s = std::move(agenda.front());
      agenda.pop_front();
      const auto& fs = s.tree->expr.features;
      std::size_t matched = 0;
      if (!fs.empty() && fs.front().kind == FeatureKind::Sel) {
        if (auto it = cat_by_base.find(fs.front().base);
            it != cat_by_base.end()) {
          matched = it->second.size();
          for (const State& t : it->second) combine(s, t);
        }
        sel_by_base[fs.front().base].push_back(s);
      } else if (!fs.empty() && fs.front().kind == FeatureKind::Cat) {
        if (auto it = sel_by_base.find(fs.front().base);
            it != sel_by_base.end()) {
          matched = it->second.size();
          for (const State& t : it->second) combine(t, s);
        }
        cat_by_base[fs.front().base].push_back(s);
      }
      // Of the 2·|chart| ordered pairings of s with previous states, all
      // but the front-matched ones fail on their head features.
      stats.category_mismatches += 2 * chart.size() - matched;
      chart.push_back(std::move(s));
      if (Clock::now() > deadline)
        throw SearchLimitError("timeout exceeded", stats);
    }
  }
};

}  // namespace

ParseResult parse(const std::vector<std::string>& tokens, const Lexicon& lex,
                  const ParseConfig& cfg) {
  if (tokens.size() > 64)
    throw SearchLimitError("sentence longer than 64 tokens", {});
  std::vector<Anchor> anchors = anchor_tokens(tokens, lex);

  Search search(cfg);
  for (const auto& a : anchors) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < a.item->phon.size(); ++i)
      mask |= std::uint64_t{1} << (a.position + i);
    search.enqueue(leaf(*a.item), mask);
  }
  if (cfg.max_epsilon_items > 0)
    for (const auto& item : lex.items)
      if (item.is_epsilon()) search.enqueue(leaf(item), 0);
  search.run();

  const std::uint64_t full = tokens.empty()
                                 ? 0
                                 : (~std::uint64_t{0} >>
                                    (64 - tokens.size()));
  std::map<std::string, DerivationTreePtr> found;
  for (const auto& s : search.chart) {
    if (s.mask != full || !is_complete(s.tree->expr)) continue;
    if (yield_of(s.tree) != tokens) continue;
    found.emplace(derivation_key(s.tree), s.tree);
  }

  ParseResult result;
  result.statistics = search.stats;
  for (auto& [key, tree] : found) result.derivations.push_back(tree);
  return result;
}

std::vector<Generated> generate(const Lexicon& lex, std::size_t max_leaves,
                                const ParseConfig& cfg) {
  ParseConfig bounded = cfg;
  bounded.max_leaves = max_leaves;

  Search search(bounded);
  search.dedup = false;
  // Unanchored: masks stay zero and items may be reused, so the agenda
  // closure enumerates every derivation shape exactly once.
  for (const auto& item : lex.items) search.enqueue(leaf(item), 0);
  search.run();

  std::map<std::string, DerivationTreePtr> found;
  for (const auto& s : search.chart) {
    if (!is_complete(s.tree->expr)) continue;
    found.emplace(derivation_key(s.tree), s.tree);
  }

  std::vector<Generated> out;
  for (auto& [key, tree] : found) out.push_back({yield_of(tree), tree});
  return out;
}

}  // namespace mg
