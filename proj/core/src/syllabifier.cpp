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

#include "abugida/syllabifier.hpp"

#include <algorithm>
#include <initializer_list>

namespace abugida {
namespace {

struct SegmentationRules {
  // Marks that glue the following consonant into the current syllable.
  std::u32string stackers;
  // Marks that make the consonant carrying them the coda of the previous
  // syllable.
  std::u32string final_killers;
};

const SegmentationRules& rules_for(ScriptId script) {
  static const SegmentationRules kBengali{U"\u09CD", U""};
  static const SegmentationRules kHindi{U"\u094D", U""};
  static const SegmentationRules kKhmer{U"\u17D2", U"\u17CD"};
  static const SegmentationRules kLao{U"\u0EBA", U"\u0ECC"};
  static const SegmentationRules kMyanmar{U"\u1039", U"\u103A\u1039"};
  static const SegmentationRules kThai{U"\u0E3A", U"\u0E4C"};
  switch (script) {
    case ScriptId::Bengali: return kBengali;
    case ScriptId::Hindi: return kHindi;
    case ScriptId::Khmer: return kKhmer;
    case ScriptId::Lao: return kLao;
    case ScriptId::Myanmar: return kMyanmar;
    case ScriptId::Thai: return kThai;
  }
  return kBengali;
}

bool contains(const std::u32string& set, CodePoint cp) {
  return set.find(cp) != std::u32string::npos;
}

class Segmenter {
 public:
  Segmenter(ScriptId script)
      : script_(script), prof_(profile(script)), rules_(rules_for(script)) {
    out_.script = script;
  }

  SegmentedSentence run(const std::u32string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) step(text, i);
    flush();
    return std::move(out_);
  }

 private:
  bool is_mark(CodePoint cp) const {
    const CharClass cls = prof_.classify(cp);
    return (cls == CharClass::DependentVowelSign &&
            !is_preposed_vowel(cp, script_)) ||
           cls == CharClass::Diacritic;
  }

  // True when the marks following position i contain a final killer.
  bool killed_at(const std::u32string& text, std::size_t i) const {
    for (std::size_t j = i + 1; j < text.size() && is_mark(text[j]); ++j) {
      if (contains(rules_.final_killers, text[j])) return true;
    }
    return false;
  }

  void step(const std::u32string& text, std::size_t i) {
    const CodePoint cp = text[i];
    if (is_space(cp)) {
      flush();
      return;
    }
    if (is_preposed_vowel(cp, script_)) {
      if (!waiting_for_base_) flush();
      current_.push_back(cp);
      waiting_for_base_ = true;
      return;
    }
    switch (prof_.classify(cp)) {
      case CharClass::Consonant:
      case CharClass::IndependentVowel: {
        const bool glued = !current_.empty() &&
                           contains(rules_.stackers, current_.back());
        const bool coda = has_base_ && killed_at(text, i);
        if (!(waiting_for_base_ || glued || coda)) flush();
        current_.push_back(cp);
        waiting_for_base_ = false;
        has_base_ = true;
        if (prof_.classify(cp) == CharClass::Consonant) has_consonant_ = true;
        return;
      }
      case CharClass::DependentVowelSign:
      case CharClass::Diacritic:
        if (current_.empty()) {
          emit(std::u32string(1, cp), false);
        } else {
          current_.push_back(cp);
        }
        return;
      case CharClass::Digit:
      case CharClass::Other:
        flush();
        emit(std::u32string(1, cp), false);
        return;
    }
  }

  void flush() {
    if (!current_.empty()) emit(current_, has_consonant_);
    current_.clear();
    waiting_for_base_ = false;
    has_base_ = false;
    has_consonant_ = false;
  }

  void emit(const std::u32string& syllable, bool has_consonant) {
    out_.syllables.push_back(u32_to_utf8(syllable));
    if (!has_consonant) ++out_.residues;
  }

  ScriptId script_;
  const ScriptProfile& prof_;
  const SegmentationRules& rules_;
  SegmentedSentence out_;
  std::u32string current_;
  bool waiting_for_base_ = false;
  bool has_base_ = false;
  bool has_consonant_ = false;
};

}  // namespace

SegmentedSentence segment(std::string_view text, ScriptId script) {
  return Segmenter(script).run(utf8_to_u32(text));
}

std::string to_syllable_line(const SegmentedSentence& sentence) {
  return join(sentence.syllables, " ");
}

std::vector<std::string> parse_syllable_line(std::string_view line) {
  return split_whitespace(line);
}

SegmentedSentence sentence_from_line(std::string_view line, ScriptId script) {
  SegmentedSentence s;
  s.script = script;
  s.syllables = parse_syllable_line(line);
  const auto& prof = profile(script);
  for (const auto& syl : s.syllables) {
    const auto cps = utf8_to_u32(syl);
    const bool has_consonant =
        std::any_of(cps.begin(), cps.end(), [&](CodePoint cp) {
          return prof.classify(cp) == CharClass::Consonant;
        });
    if (!has_consonant) ++s.residues;
  }
  return s;
}

}  // namespace abugida
