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

#include <set>

#include "abugida/error.hpp"
#include "abugida/script_profiles.hpp"

namespace abugida {
namespace {

constexpr CharClass kListed[] = {CharClass::Consonant, CharClass::DependentVowelSign,
                                 CharClass::IndependentVowel, CharClass::Diacritic,
                                 CharClass::Digit};

TEST(ScriptId, ParsesNamesAndAliases) {
  EXPECT_EQ(parse_script("bengali"), ScriptId::Bengali);
  EXPECT_EQ(parse_script("bn"), ScriptId::Bengali);
  EXPECT_EQ(parse_script("BG"), ScriptId::Bengali);
  EXPECT_EQ(parse_script("hi"), ScriptId::Hindi);
  EXPECT_EQ(parse_script("km"), ScriptId::Khmer);
  EXPECT_EQ(parse_script("kh"), ScriptId::Khmer);
  EXPECT_EQ(parse_script("lo"), ScriptId::Lao);
  EXPECT_EQ(parse_script("my"), ScriptId::Myanmar);
  EXPECT_EQ(parse_script("Thai"), ScriptId::Thai);
  EXPECT_FALSE(parse_script("tamil").has_value());
  EXPECT_THROW(script_from_string("xx"), ConfigError);
  for (ScriptId s : kAllScripts) EXPECT_EQ(parse_script(script_name(s)), s);
}

TEST(CharClassNames, RoundTrip) {
  for (CharClass c : kListed) EXPECT_EQ(parse_char_class(char_class_name(c)), c);
  EXPECT_EQ(parse_char_class(char_class_name(CharClass::Other)), CharClass::Other);
  EXPECT_FALSE(parse_char_class("Vowel").has_value());
}

TEST(Profile, BengaliBlockCoversDocumentedRange) {
  const auto& p = profile(ScriptId::Bengali);
  EXPECT_TRUE(p.in_blocks(0x0980));
  EXPECT_TRUE(p.in_blocks(0x09FF));
  EXPECT_FALSE(p.in_blocks(0x097F));
  EXPECT_FALSE(p.in_blocks(0x0A00));
}

TEST(Profile, CommonVowelMembers) {
  EXPECT_EQ(classify_char(0x1000, ScriptId::Myanmar), CharClass::Consonant);
  EXPECT_EQ(classify_char(0x0E32, ScriptId::Thai), CharClass::DependentVowelSign);
  EXPECT_EQ(classify_char(0x0995, ScriptId::Bengali), CharClass::Consonant);
  EXPECT_EQ(classify_char(0x09BF, ScriptId::Bengali), CharClass::DependentVowelSign);
  EXPECT_EQ(classify_char(U'A', ScriptId::Bengali), CharClass::Other);
}

TEST(Profile, KillersMedialsAndTonesAreDiacritics) {
  EXPECT_EQ(classify_char(0x09CD, ScriptId::Bengali), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x094D, ScriptId::Hindi), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x17D2, ScriptId::Khmer), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x1039, ScriptId::Myanmar), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x103A, ScriptId::Myanmar), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x103B, ScriptId::Myanmar), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x0E48, ScriptId::Thai), CharClass::Diacritic);
  EXPECT_EQ(classify_char(0x0EC8, ScriptId::Lao), CharClass::Diacritic);
}

TEST(Profile, DigitsAndIndependentVowels) {
  EXPECT_EQ(classify_char(0x09E7, ScriptId::Bengali), CharClass::Digit);
  EXPECT_EQ(classify_char(0x0985, ScriptId::Bengali), CharClass::IndependentVowel);
  EXPECT_EQ(classify_char(0x0966, ScriptId::Hindi), CharClass::Digit);
  EXPECT_EQ(classify_char(0x0E51, ScriptId::Thai), CharClass::Digit);
}

TEST(Profile, SetsAreDisjointInsideBlocksAndConsistent) {
  for (ScriptId s : kAllScripts) {
    const auto& p = profile(s);
    std::set<CodePoint> seen;
    for (CharClass c : kListed) {
      for (CodePoint cp : p.members(c)) {
        EXPECT_TRUE(seen.insert(cp).second) << script_name(s) << " " << static_cast<std::uint32_t>(cp);
        EXPECT_TRUE(p.in_blocks(cp));
        EXPECT_EQ(p.classify(cp), c);
      }
    }
    EXPECT_FALSE(p.consonants().empty()) << script_name(s);
    EXPECT_FALSE(p.dependent_vowels().empty()) << script_name(s);
    EXPECT_TRUE(p.members(CharClass::Other).empty());
  }
}

TEST(Profile, RepeatedCallsReturnSameObject) {
  for (ScriptId s : kAllScripts) EXPECT_EQ(&profile(s), &profile(s));
}

TEST(Profile, TsvRoundTrip) {
  for (ScriptId s : kAllScripts) {
    const auto& p = profile(s);
    const ScriptProfile q = ScriptProfile::parse(s, p.to_tsv());
    EXPECT_EQ(q.to_tsv(), p.to_tsv());
  }
}

TEST(Profile, ParseRejectsMalformedTables) {
  EXPECT_THROW(ScriptProfile::parse(ScriptId::Bengali, "# block\t0980-09FF\n0A05\tConsonant\n"),
               Error);
  EXPECT_THROW(ScriptProfile::parse(ScriptId::Bengali, "# block\t0980-09FF\n0995\tVowel\n"),
               Error);
  EXPECT_THROW(ScriptProfile::parse(ScriptId::Bengali,
                                    "# block\t0980-09FF\n0996\tConsonant\n0995\tConsonant\n"),
               Error);
}

TEST(ComposeSyllable, InherentAndSignedForms) {
  EXPECT_EQ(compose_syllable(0x0995, std::nullopt, ScriptId::Bengali), "ক");
  EXPECT_EQ(compose_syllable(0x0995, 0x09BE, ScriptId::Bengali), "কা");
  EXPECT_EQ(compose_syllable(0x0E01, 0x0E35, ScriptId::Thai), "กี");
}

TEST(ComposeSyllable, PreposedVowelComesFirst) {
  EXPECT_TRUE(is_preposed_vowel(0x0E40, ScriptId::Thai));
  EXPECT_FALSE(is_preposed_vowel(0x0E32, ScriptId::Thai));
  EXPECT_TRUE(is_preposed_vowel(0x0EC0, ScriptId::Lao));
  EXPECT_EQ(compose_syllable(0x0E01, 0x0E40, ScriptId::Thai), "เก");
}

TEST(ComposeSyllable, RejectsWrongClasses) {
  EXPECT_THROW(compose_syllable(0x09BE, std::nullopt, ScriptId::Bengali),
               ClassMismatchError);
  EXPECT_THROW(compose_syllable(0x0995, 0x0996, ScriptId::Bengali), ClassMismatchError);
  EXPECT_THROW(compose_syllable(0x0E01, 0x09BE, ScriptId::Thai), ClassMismatchError);
}

}  // namespace
}  // namespace abugida
