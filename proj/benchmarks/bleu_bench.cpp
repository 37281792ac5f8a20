// Copyright 2026 The abugida-syllables Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "abugida/bleu.hpp"
#include "abugida/random.hpp"

namespace {

using namespace abugida;

std::vector<TokenLine> random_corpus(std::size_t lines, std::uint64_t seed) {
  SeededRandom rng(seed);
  std::vector<TokenLine> out(lines);
  for (auto& line : out) {
    line.resize(20 + rng.next_index(40));
    for (auto& tok : line) tok = "s" + std::to_string(rng.next_index(200));
  }
  return out;
}

void BM_CorpusBleu(benchmark::State& state) {
  const auto refs = random_corpus(static_cast<std::size_t>(state.range(0)), 1);
  auto hyps = refs;
  SeededRandom rng(2);
  for (auto& line : hyps) line[rng.next_index(line.size())] = "x";
  for (auto _ : state) benchmark::DoNotOptimize(corpus_bleu(hyps, refs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusBleu)->Arg(100)->Arg(1000);

}  // namespace
