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
#include <vector>

namespace abugida {

using CodePoint = char32_t;

inline constexpr CodePoint kReplacementChar = 0xFFFD;

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per offending byte.
std::u32string utf8_to_u32(std::string_view text);

std::string u32_to_utf8(std::u32string_view text);
std::string to_utf8(CodePoint cp);

// Number of code points in a UTF-8 string.
std::size_t code_point_length(std::string_view text);

bool is_space(CodePoint cp);

// Splits on runs of ASCII/Unicode whitespace, dropping empty pieces.
std::vector<std::string> split_whitespace(std::string_view line);

std::string join(const std::vector<std::string>& pieces, std::string_view sep = " ");

}  // namespace abugida
