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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abugida/unicode.hpp"

namespace abugida {

enum class ScriptId { Bengali, Hindi, Khmer, Lao, Myanmar, Thai };

inline constexpr std::array<ScriptId, 6> kAllScripts = {
    ScriptId::Bengali, ScriptId::Hindi,   ScriptId::Khmer,
    ScriptId::Lao,     ScriptId::Myanmar, ScriptId::Thai};

// Canonical lowercase name ("bengali", ...).
std::string_view script_name(ScriptId script);

// Accepts full names and the two-letter codes bn/bg, hi, km/kh, lo, my, th
// (case-insensitive).
std::optional<ScriptId> parse_script(std::string_view text);

// Throwing variant of parse_script.
ScriptId script_from_string(std::string_view text);

enum class CharClass {
  Consonant,
  DependentVowelSign,
  IndependentVowel,
  Diacritic,
  Digit,
  Other,
};

std::string_view char_class_name(CharClass cls);
std::optional<CharClass> parse_char_class(std::string_view name);

struct CodeRange {
  CodePoint first;
  CodePoint last;  // inclusive

  bool contains(CodePoint cp) const { return cp >= first && cp <= last; }
};

// Per-script character classification. Immutable once built.
class ScriptProfile {
 public:
  // Parses the profile TSV format:
  //   # block<TAB>XXXX-YYYY      (one or more)
  //   XXXX<TAB><ClassName>       (sorted by code point)
  // Throws Error on malformed input or a code point outside every block.
  static ScriptProfile parse(ScriptId script, std::string_view tsv);

  ScriptId script() const { return script_; }
  std::span<const CodeRange> blocks() const { return blocks_; }

  bool in_blocks(CodePoint cp) const;

  // Code points outside the blocks, and in-block code points that are not
  // listed, classify as Other.
  CharClass classify(CodePoint cp) const;

  // Sorted members of one of the five listed classes. Empty for Other.
  std::span<const CodePoint> members(CharClass cls) const;

  std::span<const CodePoint> consonants() const {
    return members(CharClass::Consonant);
  }
  std::span<const CodePoint> dependent_vowels() const {
    return members(CharClass::DependentVowelSign);
  }
  std::span<const CodePoint> independent_vowels() const {
    return members(CharClass::IndependentVowel);
  }
  std::span<const CodePoint> diacritics() const {
    return members(CharClass::Diacritic);
  }
  std::span<const CodePoint> digits() const { return members(CharClass::Digit); }

  // Serializes back to the TSV format accepted by parse().
  std::string to_tsv() const;

 private:
  ScriptProfile() = default;

  ScriptId script_ = ScriptId::Bengali;
  std::vector<CodeRange> blocks_;
  std::unordered_map<CodePoint, CharClass> classes_;
  std::array<std::vector<CodePoint>, 5> members_;
};

// Built-in profile compiled from core/data/<script>.tsv. Thread-safe; every
// call returns the same object.
const ScriptProfile& profile(ScriptId script);

CharClass classify_char(CodePoint cp, ScriptId script);

// Thai and Lao vowels written before their consonant in storage order.
bool is_preposed_vowel(CodePoint cp, ScriptId script);

// Builds a syllable from a base consonant and an optional dependent vowel sign,
// in storage order (preposed Thai/Lao vowels come first). Throws
// ClassMismatchError when base is not a consonant or the sign is not a
// dependent vowel sign of the script.
std::string compose_syllable(CodePoint base, std::optional<CodePoint> vowel_sign,
                             ScriptId script);

}  // namespace abugida
