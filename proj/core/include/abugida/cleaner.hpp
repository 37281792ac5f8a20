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

#include <string>
#include <string_view>

#include "abugida/script_profiles.hpp"

namespace abugida {

enum class CleaningStage { First, Second };

// Stage one: keep only code points inside the script's Unicode blocks.
// Every run of removed characters and whitespace becomes one space; the
// result has no leading or trailing space.
std::string clean_first(std::string_view text, ScriptId script);

// Stage two, applied to stage-one output: additionally drops independent
// vowels, script-native digits and in-block punctuation/symbols (everything
// classified Other). Same whitespace contract as stage one.
std::string clean_second(std::string_view text, ScriptId script);

// clean_second(clean_first(text)).
std::string clean(std::string_view text, ScriptId script);

std::string clean_stage(std::string_view text, ScriptId script,
                        CleaningStage stage);

}  // namespace abugida
