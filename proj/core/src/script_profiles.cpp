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

#include "abugida/script_profiles.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "abugida/error.hpp"

namespace abugida {
namespace detail {
std::string_view embedded_profile(std::string_view name);
}  // namespace detail

namespace {

constexpr std::array<std::string_view, 6> kClassNames = {
    "Consonant", "DependentVowelSign", "IndependentVowel",
    "Diacritic", "Digit",              "Other"};

CodePoint parse_hex(std::string_view text, std::string_view context) {
  unsigned value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error("bad code point '" + std::string(text) + "' in " +
                std::string(context));
  }
  return static_cast<CodePoint>(value);
}

std::string hex4(CodePoint cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(cp));
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view script_name(ScriptId script) {
  switch (script) {
    case ScriptId::Bengali: return "bengali";
    case ScriptId::Hindi: return "hindi";
    case ScriptId::Khmer: return "khmer";
    case ScriptId::Lao: return "lao";
    case ScriptId::Myanmar: return "myanmar";
    case ScriptId::Thai: return "thai";
  }
  return "unknown";
}

std::optional<ScriptId> parse_script(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bengali" || lower == "bn" || lower == "bg") return ScriptId::Bengali;
  if (lower == "hindi" || lower == "hi") return ScriptId::Hindi;
  if (lower == "khmer" || lower == "km" || lower == "kh") return ScriptId::Khmer;
  if (lower == "lao" || lower == "lo") return ScriptId::Lao;
  if (lower == "myanmar" || lower == "my") return ScriptId::Myanmar;
  if (lower == "thai" || lower == "th") return ScriptId::Thai;
  return std::nullopt;
}

ScriptId script_from_string(std::string_view text) {
  if (auto id = parse_script(text)) return *id;
  throw ConfigError("unknown script '" + std::string(text) + "'");
}

std::string_view char_class_name(CharClass cls) {
  return kClassNames[static_cast<std::size_t>(cls)];
}

std::optional<CharClass> parse_char_class(std::string_view name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) return static_cast<CharClass>(i);
  }
  return std::nullopt;
}

ScriptProfile ScriptProfile::parse(ScriptId script, std::string_view tsv) {
  ScriptProfile p;
  p.script_ = script;
  const std::string context(script_name(script));

  std::vector<std::pair<CodePoint, CharClass>> entries;
  std::size_t pos = 0;
  while (pos <= tsv.size()) {
    std::size_t nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = trim(tsv.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;

    if (line.front() == '#') {
      line.remove_prefix(1);
      line = trim(line);
      if (line.rfind("block", 0) != 0) continue;
      line = trim(line.substr(5));
      const auto dash = line.find('-');
      if (dash == std::string_view::npos) {
        throw Error("bad block line in " + context + " profile");
      }
      CodeRange range{parse_hex(line.substr(0, dash), context),
                      parse_hex(line.substr(dash + 1), context)};
      if (range.first > range.last) {
        throw Error("empty block range in " + context + " profile");
      }
      p.blocks_.push_back(range);
      continue;
    }

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error("missing tab in " + context + " profile line: " +
                  std::string(line));
    }
    const CodePoint cp = parse_hex(trim(line.substr(0, tab)), context);
    const auto cls = parse_char_class(trim(line.substr(tab + 1)));
    if (!cls || *cls == CharClass::Other) {
      throw Error("bad class in " + context + " profile line: " +
                  std::string(line));
    }
    if (!entries.empty() && entries.back().first >= cp) {
      throw Error(context + " profile is not strictly sorted at " + hex4(cp));
    }
    entries.emplace_back(cp, *cls);
  }

  if (p.blocks_.empty()) throw Error(context + " profile declares no block");
  for (const auto& [cp, cls] : entries) {
    if (!p.in_blocks(cp)) {
      throw Error(context + " profile lists " + hex4(cp) + " outside its blocks");
    }
    p.classes_.emplace(cp, cls);
    p.members_[static_cast<std::size_t>(cls)].push_back(cp);
  }
  return p;
}

bool ScriptProfile::in_blocks(CodePoint cp) const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [cp](const CodeRange& r) { return r.contains(cp); });
}

CharClass ScriptProfile::classify(CodePoint cp) const {
  const auto it = classes_.find(cp);
  return it == classes_.end() ? CharClass::Other : it->second;
}

std::span<const CodePoint> ScriptProfile::members(CharClass cls) const {
  if (cls == CharClass::Other) return {};
  return members_[static_cast<std::size_t>(cls)];
}

std::string ScriptProfile::to_tsv() const {
  std::string out;
  for (const auto& r : blocks_) {
    out += "# block\t" + hex4(r.first) + "-" + hex4(r.last) + "\n";
  }
  std::vector<std::pair<CodePoint, CharClass>> sorted(classes_.begin(),
                                                      classes_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [cp, cls] : sorted) {
    out += hex4(cp) + "\t" + std::string(char_class_name(cls)) + "\n";
  }
  return out;
}

const ScriptProfile& profile(ScriptId script) {
  static const std::array<ScriptProfile, 6> profiles = [] {
    auto load = [](ScriptId id) {
      return ScriptProfile::parse(id, detail::embedded_profile(script_name(id)));
    };
    return std::array<ScriptProfile, 6>{
        load(ScriptId::Bengali), load(ScriptId::Hindi),   load(ScriptId::Khmer),
        load(ScriptId::Lao),     load(ScriptId::Myanmar), load(ScriptId::Thai)};
  }();
  return profiles[static_cast<std::size_t>(script)];
}

CharClass classify_char(CodePoint cp, ScriptId script) {
  return profile(script).classify(cp);
}

bool is_preposed_vowel(CodePoint cp, ScriptId script) {
  switch (script) {
    case ScriptId::Thai: return cp >= 0x0E40 && cp <= 0x0E44;
    case ScriptId::Lao: return cp >= 0x0EC0 && cp <= 0x0EC4;
    default: return false;
  }
}

std::string compose_syllable(CodePoint base, std::optional<CodePoint> vowel_sign,
                             ScriptId script) {
  const auto& prof = profile(script);
  if (prof.classify(base) != CharClass::Consonant) {
    throw ClassMismatchError("U+" + hex4(base) + " is not a " +
                             std::string(script_name(script)) + " consonant");
  }
  if (!vowel_sign) return to_utf8(base);
  if (prof.classify(*vowel_sign) != CharClass::DependentVowelSign) {
    throw ClassMismatchError("U+" + hex4(*vowel_sign) + " is not a " +
                             std::string(script_name(script)) +
                             " dependent vowel sign");
  }
  if (is_preposed_vowel(*vowel_sign, script)) {
    return to_utf8(*vowel_sign) + to_utf8(base);
  }
  return to_utf8(base) + to_utf8(*vowel_sign);
}

}  // namespace abugida
