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

#include <gtest/gtest.h>

#include <map>

#include "abugida/syllabifier.hpp"
#include "abugida/synthetic.hpp"
#include "abugida/unicode.hpp"

namespace abugida {
namespace {

TEST(SyntheticCorpus, DeterministicForSeed) {
  SyntheticSpec spec;
  spec.sentences = 50;
  EXPECT_EQ(synthetic_corpus(spec), synthetic_corpus(spec));
  SyntheticSpec other = spec;
  other.seed = 2;
  EXPECT_NE(synthetic_corpus(spec), synthetic_corpus(other));
}

TEST(SyntheticCorpus, SentencesSegmentIntoConsonantVowelSyllables) {
  SyntheticSpec spec;
  spec.sentences = 200;
  for (const auto& line : synthetic_corpus(spec)) {
    const SegmentedSentence s = segment(line, ScriptId::Bengali);
    EXPECT_EQ(s.residues, 0u);
    EXPECT_GE(s.syllables.size(), spec.min_sentence_syllables);
    EXPECT_LE(s.syllables.size(),
              spec.max_sentence_syllables + spec.max_word_syllables - 1);
    for (const auto& syl : s.syllables) {
      const std::u32string cps = utf8_to_u32(syl);
      ASSERT_EQ(cps.size(), 2u) << line;
      EXPECT_GE(cps[0], U'ক');
      EXPECT_LT(cps[0], U'ক' + 20);
      EXPECT_GE(cps[1], U'া');
      EXPECT_LT(cps[1], U'া' + 5);
    }
  }
}

TEST(SyntheticLexicon, FidelityControlsPrimaryVowels) {
  SyntheticSpec spec;
  spec.lexicon_size = 2000;
  const SyntheticLexicon lex = synthetic_lexicon(spec);
  EXPECT_EQ(lex.words.size(), 2000u);
  const double share =
      static_cast<double>(lex.primary_syllables) / static_cast<double>(lex.total_syllables);
  EXPECT_NEAR(share, 0.9, 0.02);

  // Recount from the text: each consonant's primary vowel is its index mod 5.
  std::size_t primary = 0, total = 0;
  for (const auto& w : lex.words) {
    const std::u32string cps = utf8_to_u32(w);
    for (std::size_t i = 0; i + 1 < cps.size(); i += 2) {
      ++total;
      if ((cps[0 + i] - 0x0995) % 5 == cps[i + 1] - 0x09BE) ++primary;
    }
  }
  EXPECT_EQ(total, lex.total_syllables);
  EXPECT_EQ(primary, lex.primary_syllables);

  spec.vowel_fidelity = 1.0;
  const SyntheticLexicon exact = synthetic_lexicon(spec);
  EXPECT_EQ(exact.primary_syllables, exact.total_syllables);
}

TEST(SyntheticCorpus, RejectsBadShapes) {
  SyntheticSpec spec;
  spec.vowels = 1;
  EXPECT_THROW(synthetic_corpus(spec), std::invalid_argument);
  spec = {};
  spec.min_sentence_syllables = 5;
  spec.max_sentence_syllables = 4;
  EXPECT_THROW(synthetic_corpus(spec), std::invalid_argument);
}

TEST(CopyTask, TokensAndLengths) {
  const auto lines = copy_task_corpus(500, 5, 3, 8, 7);
  ASSERT_EQ(lines.size(), 500u);
  std::map<std::string, int> counts;
  for (const auto& line : lines) {
    const auto toks = split_whitespace(line);
    EXPECT_GE(toks.size(), 3u);
    EXPECT_LE(toks.size(), 8u);
    for (const auto& t : toks) ++counts[t];
  }
  EXPECT_EQ(counts.size(), 5u);
  EXPECT_TRUE(counts.count("t0") && counts.count("t4"));
  EXPECT_EQ(copy_task_corpus(500, 5, 3, 8, 7), lines);
  EXPECT_THROW(copy_task_corpus(1, 0, 3, 8, 7), std::invalid_argument);
}

}  // namespace
}  // namespace abugida
