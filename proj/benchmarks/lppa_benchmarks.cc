// Copyright 2026 The LPPA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "lppa/deid.h"
#include "lppa/eval.h"
#include "lppa/mock_transport.h"
#include "lppa/rule_tagger.h"
#include "lppa/synth.h"
#include "lppa/synthqual.h"

namespace lppa {
namespace {

// Notes from the mock generator, so the benchmarks need no test fixtures.
const Corpus& Notes() {
  static const Corpus* corpus = [] {
    SyntheticTransport mock(LoadDefaultRuleset(LPPA_DEFAULT_DATA_DIR));
    auto* c = new Corpus;
    for (std::uint64_t i = 0; i < 200; ++i) {
      ChatRequest r = BuildAegPrompt();
      r.seed = i;
      GeneratedNote g = ParseGeneration(mock.Complete(r));
      c->push_back(NoteRecord{"n" + std::to_string(i), g.text, g.phi,
                              NoteSource::kAeg});
    }
    return c;
  }();
  return *corpus;
}

void BM_TagNote(benchmark::State& state) {
  Ruleset rules = LoadDefaultRuleset(LPPA_DEFAULT_DATA_DIR);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TagNote(Notes()[i++ % Notes().size()], rules));
  }
}
BENCHMARK(BM_TagNote);

void BM_Deidentify(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const NoteRecord& n = Notes()[i++ % Notes().size()];
    benchmark::DoNotOptimize(Deidentify(n.text, *n.phi));
  }
}
BENCHMARK(BM_Deidentify);

void BM_ScoreCorpus(benchmark::State& state) {
  std::vector<GoldPredPair> pairs;
  for (const NoteRecord& n : Notes()) pairs.emplace_back(*n.phi, *n.phi);
  for (auto _ : state) benchmark::DoNotOptimize(ScoreCorpus(pairs));
}
BENCHMARK(BM_ScoreCorpus);

void BM_SelfBleu(benchmark::State& state) {
  std::vector<std::string> texts;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    texts.push_back(Notes()[i % Notes().size()].text);
  }
  for (auto _ : state) benchmark::DoNotOptimize(SelfBleu(texts));
}
BENCHMARK(BM_SelfBleu)->Arg(50)->Arg(200);

}  // namespace
}  // namespace lppa

BENCHMARK_MAIN();
