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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abugida/random.hpp"
#include "abugida/syllabifier.hpp"

namespace abugida {

inline constexpr std::string_view kMaskToken = "<mask>";

enum class CorruptionKind { ConsonantOnly, VowelOnly, RandomDelete, Mask };

struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::ConsonantOnly;
  // Characters deleted per syllable (1 or 2) for RandomDelete; masked
  // syllables per sentence (3, 5, 8 or 10) for Mask; unused otherwise.
  std::size_t amount = 0;
  std::uint64_t seed = 0;

  // Parses the CLI names consonant, vowel, delete1, delete2, mask3, mask5,
  // mask8, mask10. Throws ConfigError otherwise.
  static CorruptionSpec parse(std::string_view name, std::uint64_t seed = 0);

  // Inverse of parse().
  std::string name() const;
};

// One token per syllable made of its consonants; consonant-free syllables
// contribute nothing.
std::vector<std::string> extract_consonants(const SegmentedSentence& sentence);

// One token per syllable made of its dependent vowel signs; syllables without
// a written vowel sign contribute nothing.
std::vector<std::string> extract_vowels(const SegmentedSentence& sentence);

// Removes min(n, len - 1) distinct code points from every syllable at
// uniformly drawn positions. Token count is preserved and no token becomes
// empty.
std::vector<std::string> delete_random_chars(const SegmentedSentence& sentence,
                                             std::size_t n, RandomSource& rng);

// Whether num_syllables positions admit k pairwise non-adjacent picks.
constexpr bool can_mask(std::size_t num_syllables, std::size_t k) {
  return num_syllables + 1 >= 2 * k;
}

struct MaskOutcome {
  enum class Status { Masked, Skipped };

  Status status = Status::Skipped;
  std::vector<std::string> tokens;      // empty when skipped
  std::vector<std::size_t> positions;   // sorted, pairwise non-adjacent

  bool masked() const { return status == Status::Masked; }
};

// Replaces a uniformly drawn set of k pairwise non-adjacent syllables with
// kMaskToken, or reports Skipped when the sentence is too short.
MaskOutcome mask_syllables(const SegmentedSentence& sentence, std::size_t k,
                           RandomSource& rng);

// Applies spec to one sentence. nullopt means the sentence was skipped
// (mask mode only).
std::optional<std::vector<std::string>> corrupt(const SegmentedSentence& sentence,
                                                const CorruptionSpec& spec,
                                                RandomSource& rng);

struct CorruptedCorpus {
  std::vector<std::string> source;        // corrupted lines, skipped omitted
  std::vector<std::string> target;        // matching full syllable lines
  std::vector<std::size_t> kept;          // input line index of each pair
  std::vector<std::size_t> skipped;       // input line indices left out
};

// Corrupts every line; line i draws from SeededRandom(derive_seed(seed, i)),
// so the output does not depend on processing order.
CorruptedCorpus corrupt_corpus(const std::vector<SegmentedSentence>& corpus,
                               const CorruptionSpec& spec);

}  // namespace abugida
