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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace abugida {

using TokenId = std::int32_t;

// Token <-> id mapping with five reserved ids.
class Vocab {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kBos = 1;
  static constexpr TokenId kEos = 2;
  static constexpr TokenId kUnk = 3;
  static constexpr TokenId kMask = 4;
  static constexpr TokenId kNumSpecials = 5;

  // Specials only.
  Vocab();

  // Tokens with frequency >= min_freq, ordered by descending frequency and
  // then first occurrence.
  static Vocab build(const std::vector<std::string>& lines,
                     std::uint64_t min_freq = 1);
  static Vocab build_from_file(const std::filesystem::path& corpus,
                               std::uint64_t min_freq = 1);

  // Plain-text form: one "token<TAB>frequency" line per non-special token,
  // in id order.
  std::string serialize() const;
  static Vocab parse(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static Vocab load(const std::filesystem::path& path);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(TokenId id) const { return tokens_.at(id); }
  std::uint64_t frequency(TokenId id) const { return freqs_.at(id); }
  // kUnk for unknown tokens.
  TokenId id(std::string_view token) const;
  bool contains(std::string_view token) const;

  // Space-delimited tokens to ids, with kEos appended.
  std::vector<TokenId> encode(std::string_view line) const;

  // Stops at the first kEos; drops kPad and kBos. <unk> and <mask> are kept
  // as literal tokens.
  std::string decode(std::span<const TokenId> ids) const;

  bool operator==(const Vocab& other) const { return tokens_ == other.tokens_; }

 private:
  void add(std::string token, std::uint64_t freq);

  std::vector<std::string> tokens_;
  std::vector<std::uint64_t> freqs_;
  std::unordered_map<std::string, TokenId> index_;
};

}  // namespace abugida
