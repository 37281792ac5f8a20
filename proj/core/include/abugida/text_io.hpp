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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace abugida {

// Reads a newline-delimited UTF-8 file. A trailing '\r' on each line is dropped.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes one line per element, each terminated by '\n'.
void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits. Used for manifest digests.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace abugida
