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

#include "abugida/cleaner.hpp"

namespace abugida {
namespace {

template <typename Keep>
std::string filter_collapse(std::string_view text, Keep keep) {
  const std::u32string in = utf8_to_u32(text);
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (CodePoint cp : in) {
    if (!is_space(cp) && keep(cp)) {
      if (pending_space && !out.empty()) out.push_back(U' ');
      pending_space = false;
      out.push_back(cp);
    } else {
      pending_space = true;
    }
  }
  return u32_to_utf8(out);
}

}  // namespace

std::string clean_first(std::string_view text, ScriptId script) {
  const auto& prof = profile(script);
  return filter_collapse(text, [&](CodePoint cp) { return prof.in_blocks(cp); });
}

std::string clean_second(std::string_view text, ScriptId script) {
  const auto& prof = profile(script);
  return filter_collapse(text, [&](CodePoint cp) {
    switch (prof.classify(cp)) {
      case CharClass::Consonant:
      case CharClass::DependentVowelSign:
      case CharClass::Diacritic:
        return true;
      default:
        return false;
    }
  });
}

std::string clean(std::string_view text, ScriptId script) {
  return clean_second(clean_first(text, script), script);
}

std::string clean_stage(std::string_view text, ScriptId script,
                        CleaningStage stage) {
  return stage == CleaningStage::First ? clean_first(text, script)
                                       : clean_second(text, script);
}

}  // namespace abugida
