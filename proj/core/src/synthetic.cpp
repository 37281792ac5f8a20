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

#include "abugida/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abugida/random.hpp"
#include "abugida/script_profiles.hpp"

namespace abugida {
namespace {

constexpr CodePoint kFirstConsonant = 0x0995;
constexpr CodePoint kFirstVowelSign = 0x09BE;

std::size_t uniform_between(SeededRandom& rng, std::size_t lo, std::size_t hi) {
  return lo + rng.next_index(hi - lo + 1);
}

struct Word {
  std::string text;
  std::size_t syllables = 0;
};

std::vector<Word> make_lexicon(const SyntheticSpec& spec, SyntheticLexicon* stats) {
  if (spec.consonants == 0 || spec.consonants > 20 || spec.vowels < 2 || spec.vowels > 5) {
    throw std::invalid_argument("synthetic alphabet must have 1-20 consonants, 2-5 vowels");
  }
  if (spec.lexicon_size == 0 || spec.min_word_syllables == 0 ||
      spec.min_word_syllables > spec.max_word_syllables) {
    throw std::invalid_argument("bad synthetic lexicon shape");
  }
  SeededRandom rng(derive_seed(spec.seed, 0));
  std::vector<Word> lexicon;
  for (std::size_t w = 0; w < spec.lexicon_size; ++w) {
    Word word;
    word.syllables = uniform_between(rng, spec.min_word_syllables, spec.max_word_syllables);
    for (std::size_t s = 0; s < word.syllables; ++s) {
      const std::size_t c = rng.next_index(spec.consonants);
      const std::size_t primary = c % spec.vowels;
      std::size_t v = primary;
      if (rng.next_unit() >= spec.vowel_fidelity) {
        v = (primary + 1 + rng.next_index(spec.vowels - 1)) % spec.vowels;
      } else if (stats) {
        ++stats->primary_syllables;
      }
      word.text += compose_syllable(kFirstConsonant + static_cast<CodePoint>(c),
                                    kFirstVowelSign + static_cast<CodePoint>(v),
                                    ScriptId::Bengali);
    }
    if (stats) {
      stats->words.push_back(word.text);
      stats->total_syllables += word.syllables;
    }
    lexicon.push_back(std::move(word));
  }
  return lexicon;
}

}  // namespace

SyntheticLexicon synthetic_lexicon(const SyntheticSpec& spec) {
  SyntheticLexicon out;
  make_lexicon(spec, &out);
  return out;
}

std::vector<std::string> synthetic_corpus(const SyntheticSpec& spec) {
  if (spec.min_sentence_syllables == 0 ||
      spec.min_sentence_syllables > spec.max_sentence_syllables) {
    throw std::invalid_argument("bad synthetic sentence length range");
  }
  const std::vector<Word> lexicon = make_lexicon(spec, nullptr);
  std::vector<double> cumulative(lexicon.size());
  double total = 0.0;
  for (std::size_t r = 0; r < lexicon.size(); ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), spec.zipf_exponent);
    cumulative[r] = total;
  }

  SeededRandom rng(derive_seed(spec.seed, 1));
  std::vector<std::string> lines;
  lines.reserve(spec.sentences);
  for (std::size_t i = 0; i < spec.sentences; ++i) {
    const std::size_t target =
        uniform_between(rng, spec.min_sentence_syllables, spec.max_sentence_syllables);
    std::string line;
    std::size_t syllables = 0;
    while (syllables < target) {
      const double u = rng.next_unit() * total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      if (it == cumulative.end()) --it;
      const Word& word = lexicon[static_cast<std::size_t>(it - cumulative.begin())];
      if (!line.empty()) line += ' ';
      line += word.text;
      syllables += word.syllables;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> copy_task_corpus(std::size_t sentences, std::size_t alphabet,
                                          std::size_t min_len, std::size_t max_len,
                                          std::uint64_t seed) {
  if (alphabet == 0 || min_len == 0 || min_len > max_len) {
    throw std::invalid_argument("bad copy task shape");
  }
  SeededRandom rng(seed);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < sentences; ++i) {
    const std::size_t len = uniform_between(rng, min_len, max_len);
    std::string line;
    for (std::size_t t = 0; t < len; ++t) {
      if (t) line += ' ';
      line += 't' + std::to_string(rng.next_index(alphabet));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace abugida
