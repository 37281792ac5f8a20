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

#include "abugida/random.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abugida {

std::vector<std::size_t> RandomSource::next_subset(std::size_t n,
                                                   std::size_t k,
                                                   bool non_adjacent) {
  // Non-adjacent k-subsets of [0, n) are in bijection with plain k-subsets of
  // [0, n - k + 1): sort, then shift the i-th element right by i.
  std::size_t universe = n;
  if (non_adjacent && k > 0) {
    if (n + 1 < 2 * k) throw std::invalid_argument("next_subset: n < 2k - 1");
    universe = n - k + 1;
  }
  if (k > universe) throw std::invalid_argument("next_subset: k > n");

  // Floyd's algorithm: exactly k draws, uniform over all k-subsets.
  std::set<std::size_t> chosen;
  for (std::size_t j = universe - k; j < universe; ++j) {
    const std::size_t t = next_index(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::size_t> out(chosen.begin(), chosen.end());
  if (non_adjacent) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += i;
  }
  return out;
}

std::size_t SeededRandom::next_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("next_index: bound must be > 0");
  const std::uint64_t b = bound;
  // Largest multiple of b that fits; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b + 1) % b;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return static_cast<std::size_t>(x % b);
}

double SeededRandom::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace abugida
