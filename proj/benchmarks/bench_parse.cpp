#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mg/compose.hpp"
#include "mg/lexicon.hpp"
#include "mg/parser.hpp"

namespace {

using namespace mg;

Lexicon& bundled() {
  static Lexicon lex =
      load_lexicon_file(std::string(MGC_DATA_DIR) + "/french-clitics.lex");
  return lex;
}

const char* kSentences[] = {
    "Jean la donne",
    "Je l'ai vu",
    "Je l'ai souvent vu",
    "Ce type, Marie le voit trop",
    "Pierre en voit la fin",
    "Il semble le lui donner",
    "Je semble la réparer",
};

void BM_parse(benchmark::State& state) {
  const char* sentence = kSentences[state.range(0)];
  std::vector<std::string> toks = tokenize(sentence);
  for (auto _ : state) {
    ParseResult r = parse(toks, bundled());
    benchmark::DoNotOptimize(r.derivations);
  }
  state.SetLabel(sentence);
}
BENCHMARK(BM_parse)->DenseRange(0, 6);

void BM_parse_and_compose(benchmark::State& state) {
  const char* sentence = kSentences[state.range(0)];
  std::vector<std::string> toks = tokenize(sentence);
  for (auto _ : state) {
    ParseResult r = parse(toks, bundled());
    for (const auto& d : r.derivations) {
      Composition c = compose(d, bundled());
      benchmark::DoNotOptimize(c.formula);
    }
  }
  state.SetLabel(sentence);
}
BENCHMARK(BM_parse_and_compose)->DenseRange(0, 6);

void BM_generate(benchmark::State& state) {
  std::size_t max_leaves = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto out = generate(bundled(), max_leaves);
    benchmark::DoNotOptimize(out);
    state.counters["derivations"] = static_cast<double>(out.size());
  }
}
BENCHMARK(BM_generate)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
