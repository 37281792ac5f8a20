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

#include "abugida/reconstructor/decoder.hpp"
#include "abugida/reconstructor/model.hpp"

namespace {

using namespace abugida;
namespace rc = abugida::reconstructor;

rc::ModelConfig bench_config() {
  rc::ModelConfig c;
  c.model_dim = 64;
  c.ff_dim = 256;
  c.heads = 8;
  c.dropout = 0.1;
  return c;
}

std::vector<TokenId> sequence(std::size_t n, std::size_t vocab) {
  std::vector<TokenId> ids;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ids.push_back(static_cast<TokenId>(Vocab::kNumSpecials + (i * 7) % (vocab - 5)));
  }
  ids.push_back(Vocab::kEos);
  return ids;
}

void BM_TrainStep(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  rc::Model model(bench_config(), 40, 120);
  model.initialize(1);
  const auto src = sequence(len, 40), tgt = sequence(len, 120);
  std::vector<float> grad(model.parameter_count());
  SeededRandom rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.accumulate_gradients(src, tgt, grad, &rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(len));
}
BENCHMARK(BM_TrainStep)->Arg(16)->Arg(40);

void BM_BeamDecode(benchmark::State& state) {
  rc::Model model(bench_config(), 40, 120);
  model.initialize(1);
  const auto src = sequence(30, 40);
  const auto beam = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rc::beam_decode(model, src, beam, 0.6, 30));
}
BENCHMARK(BM_BeamDecode)->Arg(1)->Arg(6);

}  // namespace
