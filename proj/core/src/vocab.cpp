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

#include "abugida/vocab.hpp"

#include <algorithm>
#include <charconv>

#include "abugida/error.hpp"
#include "abugida/text_io.hpp"
#include "abugida/unicode.hpp"

namespace abugida {

Vocab::Vocab() {
  for (const char* special : {"<pad>", "<s>", "</s>", "<unk>", "<mask>"}) {
    add(special, 0);
  }
}

void Vocab::add(std::string token, std::uint64_t freq) {
  index_.emplace(token, static_cast<TokenId>(tokens_.size()));
  tokens_.push_back(std::move(token));
  freqs_.push_back(freq);
}

Vocab Vocab::build(const std::vector<std::string>& lines,
                   std::uint64_t min_freq) {
  struct Entry {
    std::string token;
    std::uint64_t freq = 0;
    std::size_t first = 0;
  };
  std::vector<Entry> entries;
  std::unordered_map<std::string, std::size_t> where;
  Vocab vocab;
  for (const auto& line : lines) {
    for (auto& tok : split_whitespace(line)) {
      if (vocab.index_.count(tok)) {
        ++vocab.freqs_[vocab.index_.at(tok)];
        continue;
      }
      auto [it, inserted] = where.emplace(tok, entries.size());
      if (inserted) entries.push_back({tok, 0, entries.size()});
      ++entries[it->second].freq;
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.freq != b.freq) return a.freq > b.freq;
                     return a.first < b.first;
                   });
  for (auto& e : entries) {
    if (e.freq >= min_freq) vocab.add(std::move(e.token), e.freq);
  }
  return vocab;
}

Vocab Vocab::build_from_file(const std::filesystem::path& corpus,
                             std::uint64_t min_freq) {
  return build(read_lines(corpus), min_freq);
}

std::string Vocab::serialize() const {
  std::string out;
  for (std::size_t i = kNumSpecials; i < tokens_.size(); ++i) {
    out += tokens_[i];
    out += '\t';
    out += std::to_string(freqs_[i]);
    out += '\n';
  }
  return out;
}

Vocab Vocab::parse(std::string_view text) {
  Vocab vocab;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw Error("vocab line " + std::to_string(line_no) + ": expected token<TAB>frequency");
    }
    std::uint64_t freq = 0;
    const auto num = line.substr(tab + 1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), freq);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw Error("vocab line " + std::to_string(line_no) + ": bad frequency");
    }
    std::string token(line.substr(0, tab));
    if (vocab.index_.count(token)) {
      throw Error("vocab line " + std::to_string(line_no) + ": duplicate token");
    }
    vocab.add(std::move(token), freq);
  }
  return vocab;
}

void Vocab::save(const std::filesystem::path& path) const {
  write_file(path, serialize());
}

Vocab Vocab::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

TokenId Vocab::id(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  return it == index_.end() ? kUnk : it->second;
}

bool Vocab::contains(std::string_view token) const {
  return index_.count(std::string(token)) != 0;
}

std::vector<TokenId> Vocab::encode(std::string_view line) const {
  std::vector<TokenId> ids;
  for (const auto& tok : split_whitespace(line)) ids.push_back(id(tok));
  ids.push_back(kEos);
  return ids;
}

std::string Vocab::decode(std::span<const TokenId> ids) const {
  std::vector<std::string> pieces;
  for (TokenId id : ids) {
    if (id == kEos) break;
    if (id == kPad || id == kBos) continue;
    pieces.push_back(tokens_.at(id));
  }
  return join(pieces, " ");
}

}  // namespace abugida
