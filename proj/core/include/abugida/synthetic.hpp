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
#include <string>
#include <vector>

namespace abugida {

// Bengali-script toy language: every syllable is one of `consonants` letters
// (from U+0995) followed by one of `vowels` signs (from U+09BE). Each
// consonant has a primary vowel; a lexicon syllable takes it with probability
// vowel_fidelity and a different vowel otherwise, fixed once per word.
// Sentences are Zipf-distributed lexicon words separated by spaces.
struct SyntheticSpec {
  std::size_t sentences = 3000;
  std::size_t consonants = 20;
  std::size_t vowels = 5;
  double vowel_fidelity = 0.9;
  std::size_t lexicon_size = 300;
  std::size_t min_word_syllables = 1;
  std::size_t max_word_syllables = 3;
  std::size_t min_sentence_syllables = 20;
  std::size_t max_sentence_syllables = 40;
  double zipf_exponent = 1.0;
  std::uint64_t seed = 1111;
};

struct SyntheticLexicon {
  std::vector<std::string> words;
  std::size_t primary_syllables = 0;  // syllables carrying the primary vowel
  std::size_t total_syllables = 0;
};

SyntheticLexicon synthetic_lexicon(const SyntheticSpec& spec);

// Raw text lines, one sentence per line.
std::vector<std::string> synthetic_corpus(const SyntheticSpec& spec);

// Space-separated tokens over an alphabet of `alphabet` symbols ("t0", "t1",
// ...), lengths uniform in [min_len, max_len]. Source equals target.
std::vector<std::string> copy_task_corpus(std::size_t sentences, std::size_t alphabet,
                                          std::size_t min_len, std::size_t max_len,
                                          std::uint64_t seed);

}  // namespace abugida
