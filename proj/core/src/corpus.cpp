#include "mg/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mg/compose.hpp"
#include "mg/errors.hpp"
#include "mg/lambda.hpp"
#include "mg/render.hpp"

namespace mg {

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t sep = line.find("::", pos);
    if (sep == std::string::npos) {
      fields.push_back(trim(line.substr(pos)));
      return fields;
    }
    fields.push_back(trim(line.substr(pos, sep - pos)));
    pos = sep + 2;
  }
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw SyntaxError(what, "line " + std::to_string(line));
}

// Parses `expect <accept|reject> [tag, ...]`, the part before the first ::.
void parse_head(const std::string& head, int line, CorpusEntry& entry) {
  std::istringstream in(head);
  std::string keyword, expectation;
  in >> keyword >> expectation;
  if (keyword != "expect") fail(line, "corpus line must start with 'expect'");
  if (expectation == "accept")
    entry.accept = true;
  else if (expectation == "reject")
    entry.accept = false;
  else
    fail(line, "expectation must be 'accept' or 'reject'");

  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  if (rest.empty()) return;
  if (rest.front() != '[' || rest.back() != ']')
    fail(line, "tags must be a bracketed list after the expectation");
  std::string inside = rest.substr(1, rest.size() - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inside.find(',', start);
    std::string tag = trim(inside.substr(start, comma - start));
    if (tag.empty()) fail(line, "empty tag");
    entry.tags.push_back(std::move(tag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

std::string count_derivations(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " derivation" : " derivations");
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> entries;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string> fields = split_fields(line);
    if (fields.size() > 3) fail(lineno, "too many '::' fields");

    CorpusEntry entry;
    entry.line = lineno;
    parse_head(fields[0], lineno, entry);

    if (fields.size() < 2 || fields[1].empty()) fail(lineno, "missing sentence");
    entry.sentence = fields[1];

    if (fields.size() == 3) {
      if (!entry.accept) fail(lineno, "formula only allowed with accept");
      if (fields[2].empty()) fail(lineno, "empty formula");
      try {
        parse_lambda_term(fields[2]);
      } catch (const SyntaxError& e) {
        fail(lineno, std::string("bad formula: ") + e.what());
      }
      entry.expected_formula = fields[2];
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open corpus file: " + path, "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const Lexicon& lexicon, const ParseConfig& cfg) {
  CorpusReport report;
  for (const auto& entry : entries) {
    CorpusResult r;
    r.entry = entry;
    try {
      ParseResult parsed = parse(tokenize(entry.sentence), lexicon, cfg);
      r.derivations = parsed.derivations.size();
      if (!entry.accept) {
        r.passed = parsed.derivations.empty();
        if (!r.passed) r.detail = "parsed with " + count_derivations(r.derivations);
      } else if (parsed.derivations.empty()) {
        r.detail = "no derivation";
      } else if (!entry.expected_formula) {
        r.passed = true;
      } else {
        TermPtr want = parse_lambda_term(*entry.expected_formula);
        std::set<std::string> seen;
        for (const auto& d : parsed.derivations) {
          try {
            Composition c = compose(d, lexicon);
            if (alpha_equal(c.formula, want)) {
              r.passed = true;
              break;
            }
            seen.insert(render(c.formula));
          } catch (const ComposeError& e) {
            seen.insert(std::string("error: ") + e.what());
          }
        }
        if (!r.passed) {
          r.detail = "derivations compose to:";
          for (const auto& s : seen) r.detail += " " + s + ";";
          r.detail.pop_back();
        }
      }
    } catch (const OutOfVocabularyError& e) {
      r.detail = std::string("error: ") + e.what();
    } catch (const SearchLimitError& e) {
      r.detail = std::string("error: ") + e.what();
    }
    ++(r.passed ? report.passed : report.failed);
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string render_report(const CorpusReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS" : "FAIL") << ' '
        << (r.entry.accept ? "accept" : "reject") << " :: " << r.entry.sentence;
    if (r.entry.expected_formula) out << " :: " << *r.entry.expected_formula;
    if (!r.detail.empty()) out << "  (" << r.detail << ')';
    out << '\n';
  }
  out << report.passed << " passed, " << report.failed << " failed, "
      << report.results.size() << " total\n";
  return out.str();
}

}  // namespace mg
