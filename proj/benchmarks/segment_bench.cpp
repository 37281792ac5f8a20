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

#include "abugida/cleaner.hpp"
#include "abugida/corruption.hpp"
#include "abugida/syllabifier.hpp"
#include "abugida/synthetic.hpp"

namespace {

using namespace abugida;

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> lines = [] {
    SyntheticSpec spec;
    spec.sentences = 500;
    return synthetic_corpus(spec);
  }();
  return lines;
}

void BM_Clean(benchmark::State& state) {
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& line : corpus()) {
      benchmark::DoNotOptimize(clean(line, ScriptId::Bengali));
      bytes += line.size();
    }
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
}
BENCHMARK(BM_Clean);

void BM_Segment(benchmark::State& state) {
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& line : corpus()) {
      benchmark::DoNotOptimize(segment(line, ScriptId::Bengali));
      bytes += line.size();
    }
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
}
BENCHMARK(BM_Segment);

void BM_Mask(benchmark::State& state) {
  std::vector<SegmentedSentence> segmented;
  for (const auto& line : corpus()) segmented.push_back(segment(line, ScriptId::Bengali));
  const auto spec = CorruptionSpec::parse("mask" + std::to_string(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(corrupt_corpus(segmented, spec));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(segmented.size()));
}
BENCHMARK(BM_Mask)->Arg(3)->Arg(10);

}  // namespace
