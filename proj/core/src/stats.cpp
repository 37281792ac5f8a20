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

#include "abugida/stats.hpp"

#include <cstdio>

#include "abugida/corruption.hpp"

namespace abugida {

double CorpusStats::avg_syllables_per_sentence() const {
  return sentences == 0 ? 0.0
                        : static_cast<double>(syllables) /
                              static_cast<double>(sentences);
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  sentences += other.sentences;
  syllables += other.syllables;
  consonants += other.consonants;
  vowels += other.vowels;
  return *this;
}

CorpusStats corpus_stats(std::span<const SegmentedSentence> corpus) {
  CorpusStats stats;
  for (const auto& sentence : corpus) {
    const auto& prof = profile(sentence.script);
    ++stats.sentences;
    stats.syllables += sentence.syllables.size();
    for (const auto& syllable : sentence.syllables) {
      for (CodePoint cp : utf8_to_u32(syllable)) {
        switch (prof.classify(cp)) {
          case CharClass::Consonant: ++stats.consonants; break;
          case CharClass::DependentVowelSign: ++stats.vowels; break;
          default: break;
        }
      }
    }
  }
  return stats;
}

std::string MaskingStats::skipped_pct_string() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu.%02llu",
                static_cast<unsigned long long>(skipped_pct_centi / 100),
                static_cast<unsigned long long>(skipped_pct_centi % 100));
  return buf;
}

std::uint64_t percent_centi_round_half_up(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return 0;
  // round(10000 * num / den) with ties going up.
  return (20000 * num + den) / (2 * den);
}

MaskingStats summarize_masking(std::size_t k, std::uint64_t sentences,
                               std::uint64_t masked_sentences) {
  MaskingStats stats;
  stats.mask_value = k;
  stats.sentences = sentences;
  stats.masked_sentences = masked_sentences;
  stats.skipped_sentences = sentences - masked_sentences;
  stats.total_syllables_masked = k * masked_sentences;
  stats.skipped_pct_centi =
      percent_centi_round_half_up(stats.skipped_sentences, sentences);
  return stats;
}

MaskingStats masking_stats(std::span<const SegmentedSentence> corpus,
                           std::size_t k, std::uint64_t seed) {
  std::uint64_t masked = 0;
  std::uint64_t positions = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SeededRandom rng(derive_seed(seed, i));
    const auto outcome = mask_syllables(corpus[i], k, rng);
    if (outcome.masked()) {
      ++masked;
      positions += outcome.positions.size();
    }
  }
  auto stats = summarize_masking(k, corpus.size(), masked);
  stats.total_syllables_masked = positions;
  return stats;
}

}  // namespace abugida
