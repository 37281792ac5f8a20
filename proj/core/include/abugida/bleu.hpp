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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abugida {

using TokenLine = std::vector<std::string>;

inline constexpr int kBleuMaxOrder = 4;

struct Precision {
  std::uint64_t matches = 0;  // clipped n-gram matches
  std::uint64_t total = 0;    // candidate n-grams

  double value() const {
    return total == 0 ? 0.0 : static_cast<double>(matches) / total;
  }
};

struct BleuReport {
  std::array<Precision, kBleuMaxOrder> precisions{};
  double brevity_penalty = 0.0;
  double bleu = 0.0;  // 0..100
  std::uint64_t candidate_length = 0;
  std::uint64_t reference_length = 0;

  // "BLEU = 77.88, p1/p2/p3/p4 = 100.0/100.0/100.0/100.0, BP = 0.7788, ratio = 4/5"
  std::string to_string() const;
};

// Corpus-level modified n-gram precision with a single reference per line.
// Throws UndefinedPrecisionError when no candidate has n tokens, and
// std::invalid_argument when the corpora differ in length or are empty.
Precision modified_precision(std::span<const TokenLine> candidates,
                             std::span<const TokenLine> references, int n);

// 1 when c > r, else exp(1 - r/c). Requires c, r >= 1.
double brevity_penalty(std::uint64_t candidate_length,
                       std::uint64_t reference_length);

// Uniform 1/4 weights, no smoothing; BLEU is 0 when any precision is 0.
BleuReport corpus_bleu(std::span<const TokenLine> candidates,
                       std::span<const TokenLine> references);

// Convenience overload on space-delimited lines.
BleuReport corpus_bleu_lines(const std::vector<std::string>& candidates,
                             const std::vector<std::string>& references);

}  // namespace abugida
