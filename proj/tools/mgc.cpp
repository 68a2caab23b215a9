#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mg/compose.hpp"
#include "mg/corpus.hpp"
#include "mg/errors.hpp"
#include "mg/lambda.hpp"
#include "mg/lexicon.hpp"
#include "mg/parser.hpp"
#include "mg/render.hpp"

namespace {

using namespace mg;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kDefaultLexicon = MGC_DATA_DIR "/french-clitics.lex";
constexpr const char* kDefaultCorpus = MGC_DATA_DIR "/corpus.txt";

enum class Format { Text, Dot, Qtree, Json };

struct Options {
  std::string lexicon = kDefaultLexicon;
  ParseConfig cfg;
  Format format = Format::Text;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--lexicon", o.lexicon, "Lexicon file")
      ->envname("MGC_LEXICON")
      ->capture_default_str();
  cmd->add_option("--max-eps", o.cfg.max_epsilon_items,
                  "Silent (ε) leaves allowed per derivation")
      ->capture_default_str();
  cmd->add_option("--max-leaves", o.cfg.max_leaves,
                  "Total leaves allowed per derivation")
      ->capture_default_str();
  cmd->add_option("--timeout", o.cfg.timeout_seconds,
                  "Search timeout in seconds")
      ->capture_default_str();
}

void add_formats(CLI::App* cmd, Options& o) {
  auto* dot = cmd->add_flag_callback(
      "--dot", [&o] { o.format = Format::Dot; }, "Emit Graphviz DOT");
  auto* qtree = cmd->add_flag_callback(
      "--qtree", [&o] { o.format = Format::Qtree; }, "Emit LaTeX qtree");
  auto* json = cmd->add_flag_callback(
      "--json", [&o] { o.format = Format::Json; }, "Emit JSON");
  dot->excludes(qtree)->excludes(json);
  qtree->excludes(json);
}

std::string state_of(const Expression& e) {
  std::string s = "[" + to_string(e.features);
  for (const auto& m : e.movers) s += "; " + to_string(m.features);
  return s + "]";
}

const char* merge_tag(MergeVariant v) {
  switch (v) {
    case MergeVariant::Complement: return "merge<";
    case MergeVariant::Specifier: return "merge>";
    case MergeVariant::IncorporateLeft: return "merge=>";
    case MergeVariant::IncorporateRight: return "merge<=";
  }
  return "merge";
}

void print_derivation(std::ostream& out, const DerivationTreePtr& t,
                      int depth) {
  out << std::string(2 * depth, ' ');
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      out << t->item->phon_string() << " :: " << to_string(t->item->features)
          << '\n';
      break;
    case DerivationNode::Kind::Merge:
      out << merge_tag(t->variant) << ' ' << state_of(t->expr) << '\n';
      print_derivation(out, t->left, depth + 1);
      print_derivation(out, t->right, depth + 1);
      break;
    case DerivationNode::Kind::Move:
      out << "move " << (t->strength == Strength::Strong ? '+' : '*')
          << t->base << ' ' << state_of(t->expr) << '\n';
      print_derivation(out, t->child, depth + 1);
      break;
  }
}

void print_semantics(std::ostream& out, const SemanticNodePtr& n, int depth) {
  out << std::string(2 * depth, ' ');
  if (!n->direction.empty()) out << n->direction << " ⊢ ";
  out << n->label << '\n';
  for (const auto& c : n->children) print_semantics(out, c, depth + 1);
}

std::string join(const std::set<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

int run_parse(const std::string& sentence, const Options& o) {
  Lexicon lex = load_lexicon_file(o.lexicon);
  ParseResult result = parse(tokenize(sentence), lex, o.cfg);
  const auto& ds = result.derivations;
  if (ds.empty()) return 1;

  switch (o.format) {
    case Format::Dot:
      for (const auto& d : ds) std::cout << to_dot(d) << '\n';
      break;
    case Format::Qtree:
      for (const auto& d : ds) std::cout << to_qtree(d) << '\n';
      break;
    case Format::Json: {
      ordered_json doc;
      doc["sentence"] = sentence;
      doc["derivations"] = ordered_json::array();
      for (const auto& d : ds) {
        ordered_json entry;
        entry["tree"] = ordered_json::parse(to_json(d));
        try {
          Composition c = compose(d, lex);
          entry["formula"] = render(c.formula);
          entry["freeVariables"] = c.free_variables;
          entry["term"] = ordered_json::parse(to_json(c.formula));
        } catch (const ComposeError& e) {
          entry["semanticsError"] = e.what();
        }
        doc["derivations"].push_back(std::move(entry));
      }
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::Text:
      std::cout << ds.size() << (ds.size() == 1 ? " derivation" : " derivations")
                << '\n';
      for (std::size_t i = 0; i < ds.size(); ++i) {
        std::cout << "\nderivation " << (i + 1) << " of " << ds.size() << '\n';
        print_derivation(std::cout, ds[i], 1);
        std::cout << "semantics\n";
        try {
          Composition c = compose(ds[i], lex);
          print_semantics(std::cout, c.root, 1);
          std::cout << "formula: " << render(c.formula) << '\n';
          if (!c.free_variables.empty())
            std::cout << "free variables: " << join(c.free_variables, ", ")
                      << '\n';
        } catch (const ComposeError& e) {
          std::cout << "semantics unavailable: " << e.what() << '\n';
        }
      }
      break;
  }
  return 0;
}

int run_generate(const Options& o) {
  Lexicon lex = load_lexicon_file(o.lexicon);
  std::map<std::string, std::size_t> counts;  // sentence -> derivations
  for (const auto& g : generate(lex, o.cfg.max_leaves, o.cfg)) {
    std::string sentence;
    for (const auto& tok : g.sentence) {
      if (!sentence.empty()) sentence += ' ';
      sentence += tok;
    }
    ++counts[sentence];
  }
  for (const auto& [sentence, n] : counts)
    std::cout << sentence << " :: " << n << '\n';
  return 0;
}

int run_lint(const Options& o) {
  Lexicon lex = load_lexicon_file(o.lexicon);
  std::vector<LintFinding> findings;
  for (const auto& w : lex.warnings)
    findings.push_back({LintFinding::Severity::Warning, w});
  for (auto& f : lint_lexicon(lex)) findings.push_back(std::move(f));
  std::cout << format_lint_report(findings);
  for (const auto& f : findings)
    if (f.severity == LintFinding::Severity::Error) return 1;
  return 0;
}

int run_corpus(const std::string& path, const Options& o) {
  Lexicon lex = load_lexicon_file(o.lexicon);
  CorpusReport report = run_corpus(load_corpus_file(path), lex, o.cfg);
  std::cout << render_report(report);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimalist-grammar parser with synchronized semantic composition"};
  app.require_subcommand(1);

  Options parse_opts, gen_opts, lint_opts, corpus_opts;
  gen_opts.cfg.max_leaves = 8;

  std::string sentence;
  auto* cmd_parse =
      app.add_subcommand("parse", "Parse a sentence and compose its formulas");
  cmd_parse->add_option("sentence", sentence, "Sentence to parse")->required();
  add_common(cmd_parse, parse_opts);
  add_formats(cmd_parse, parse_opts);

  auto* cmd_generate = app.add_subcommand(
      "generate", "List every derivable sentence up to --max-leaves");
  add_common(cmd_generate, gen_opts);

  auto* cmd_lint =
      app.add_subcommand("lint", "Check a lexicon for shape and wiring problems");
  add_common(cmd_lint, lint_opts);

  std::string corpus_path = kDefaultCorpus;
  auto* cmd_corpus =
      app.add_subcommand("corpus", "Run a regression corpus of expectations");
  cmd_corpus->add_option("corpus", corpus_path, "Corpus file")
      ->capture_default_str();
  add_common(cmd_corpus, corpus_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_parse->parsed()) return run_parse(sentence, parse_opts);
    if (cmd_generate->parsed()) return run_generate(gen_opts);
    if (cmd_lint->parsed()) return run_lint(lint_opts);
    if (cmd_corpus->parsed()) return run_corpus(corpus_path, corpus_opts);
  } catch (const std::exception& e) {
    std::cerr << "mgc: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
