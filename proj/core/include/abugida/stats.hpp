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
#include <span>
#include <string>

#include "abugida/syllabifier.hpp"

namespace abugida {

struct CorpusStats {
  std::uint64_t sentences = 0;
  std::uint64_t syllables = 0;
  std::uint64_t consonants = 0;  // code points of class Consonant
  std::uint64_t vowels = 0;      // code points of class DependentVowelSign

  // syllables / sentences; 0 for an empty corpus.
  double avg_syllables_per_sentence() const;

  CorpusStats& operator+=(const CorpusStats& other);
};

CorpusStats corpus_stats(std::span<const SegmentedSentence> corpus);

struct MaskingStats {
  std::size_t mask_value = 0;
  std::uint64_t sentences = 0;
  std::uint64_t masked_sentences = 0;
  std::uint64_t skipped_sentences = 0;
  std::uint64_t total_syllables_masked = 0;
  // Skipped percentage in hundredths of a percent, rounded half up.
  std::uint64_t skipped_pct_centi = 0;

  double skipped_pct() const { return skipped_pct_centi / 100.0; }
  std::string skipped_pct_string() const;  // e.g. "0.02"
};

// 100 * num / den in hundredths, rounded half up (exact integer arithmetic).
std::uint64_t percent_centi_round_half_up(std::uint64_t num, std::uint64_t den);

// Builds the table row implied by the sentence counts alone.
MaskingStats summarize_masking(std::size_t k, std::uint64_t sentences,
                               std::uint64_t masked_sentences);

// Runs mask_syllables over the corpus using the same per-line substreams as
// corrupt_corpus, so stats and corrupted corpora agree for one seed.
MaskingStats masking_stats(std::span<const SegmentedSentence> corpus,
                           std::size_t k, std::uint64_t seed);

}  // namespace abugida
