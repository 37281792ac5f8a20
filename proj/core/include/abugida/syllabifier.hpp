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
#include <string>
#include <string_view>
#include <vector>

#include "abugida/script_profiles.hpp"

namespace abugida {

struct SegmentedSentence {
  ScriptId script = ScriptId::Bengali;
  std::vector<std::string> syllables;
  // Syllables that carry no consonant: leading combining marks, orphaned
  // preposed vowels, stray digits or symbols.
  std::size_t residues = 0;
};

// Rule-based syllable segmentation. A syllable is a base consonant, any
// consonants stacked onto it through the script's virama/coeng, and all the
// vowel signs and diacritics that follow. Thai/Lao preposed vowels attach to
// the next consonant; a consonant silenced by a final killer (Myanmar asat,
// Thai thanthakhat, ...) closes the preceding syllable. Spaces are boundaries.
SegmentedSentence segment(std::string_view text, ScriptId script);

// Syllables joined by single spaces.
std::string to_syllable_line(const SegmentedSentence& sentence);

// Splits a space-delimited line; an empty line yields no tokens.
std::vector<std::string> parse_syllable_line(std::string_view line);

// Wraps an already segmented line. Residues are counted against the profile.
SegmentedSentence sentence_from_line(std::string_view line, ScriptId script);

}  // namespace abugida
