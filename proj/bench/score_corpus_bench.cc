// Copyright 2026 The ocrbench Authors.
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

#include "ocrbench/score_corpus.h"

namespace ocrbench {
namespace {

const std::vector<std::string> kWords{"de", "la", "casa", "rey", "villa", "Medina",
                                      "señor", "año", "mes", "dicho", "qual", "fecho"};

std::string RandomPage(std::mt19937_64& rng, std::size_t words) {
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    out += kWords[pick(rng)];
    out += (i % 12 == 11) ? '\n' : ' ';
  }
  return out;
}

// Hypothesis is the reference with roughly one word in eight replaced.
std::vector<DocumentPair> MakeCorpus(std::size_t n_docs, std::size_t words) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> noise(0, 7);
  std::vector<DocumentPair> pairs;
  for (std::size_t i = 0; i < n_docs; ++i) {
    DocumentPair p;
    p.id = std::to_string(i);
    p.reference = RandomPage(rng, words);
    for (char c : p.reference) p.hypothesis += (noise(rng) == 0 && c != '\n') ? 'x' : c;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void BM_Serial(benchmark::State& state) {
  const auto pairs = MakeCorpus(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreCorpusSerial(pairs, NormalizationPolicy{}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Parallel(benchmark::State& state) {
  const auto pairs = MakeCorpus(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreCorpusParallel(pairs, NormalizationPolicy{}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Serial)->Args({64, 200})->Args({128, 400})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Args({64, 200})->Args({128, 400})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ocrbench

BENCHMARK_MAIN();
