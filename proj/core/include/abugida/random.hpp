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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace abugida {

// Abstract draw interface used by the corruption routines. Tests substitute a
// scripted source; production code uses SeededRandom.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform integer in [0, bound). bound must be positive.
  virtual std::size_t next_index(std::size_t bound) = 0;

  // Uniform k-subset of {0, ..., n-1}, returned sorted. With non_adjacent set,
  // no two returned positions differ by one; requires n >= 2k - 1.
  virtual std::vector<std::size_t> next_subset(std::size_t n, std::size_t k,
                                               bool non_adjacent);
};

// mt19937_64 with rejection-sampled bounded draws, so results depend only on
// the seed and the draw sequence.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::size_t next_index(std::size_t bound) override;

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::mt19937_64 engine_;
};

// Mixes a base seed with a stream index (splitmix64 finalizer). Gives every
// corpus line its own independent substream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace abugida
