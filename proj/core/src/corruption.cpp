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

#include "abugida/corruption.hpp"

#include <algorithm>
#include <charconv>

#include "abugida/error.hpp"

namespace abugida {
namespace {

std::vector<std::string> keep_class(const SegmentedSentence& sentence,
                                    CharClass wanted) {
  const auto& prof = profile(sentence.script);
  std::vector<std::string> tokens;
  for (const auto& syllable : sentence.syllables) {
    std::u32string kept;
    for (CodePoint cp : utf8_to_u32(syllable)) {
      if (prof.classify(cp) == wanted) kept.push_back(cp);
    }
    if (!kept.empty()) tokens.push_back(u32_to_utf8(kept));
  }
  return tokens;
}

}  // namespace

CorruptionSpec CorruptionSpec::parse(std::string_view name, std::uint64_t seed) {
  CorruptionSpec spec;
  spec.seed = seed;
  auto suffix_number = [&](std::string_view prefix) -> std::size_t {
    std::size_t value = 0;
    const auto digits = name.substr(prefix.size());
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return 0;
    return value;
  };
  if (name == "consonant") {
    spec.kind = CorruptionKind::ConsonantOnly;
  } else if (name == "vowel") {
    spec.kind = CorruptionKind::VowelOnly;
  } else if (name.rfind("delete", 0) == 0) {
    spec.kind = CorruptionKind::RandomDelete;
    spec.amount = suffix_number("delete");
    if (spec.amount != 1 && spec.amount != 2) {
      throw ConfigError("delete amount must be 1 or 2: " + std::string(name));
    }
  } else if (name.rfind("mask", 0) == 0) {
    spec.kind = CorruptionKind::Mask;
    spec.amount = suffix_number("mask");
    if (spec.amount != 3 && spec.amount != 5 && spec.amount != 8 &&
        spec.amount != 10) {
      throw ConfigError("mask value must be 3, 5, 8 or 10: " + std::string(name));
    }
  } else {
    throw ConfigError("unknown corruption kind '" + std::string(name) + "'");
  }
  return spec;
}

std::string CorruptionSpec::name() const {
  switch (kind) {
    case CorruptionKind::ConsonantOnly: return "consonant";
    case CorruptionKind::VowelOnly: return "vowel";
    case CorruptionKind::RandomDelete: return "delete" + std::to_string(amount);
    case CorruptionKind::Mask: return "mask" + std::to_string(amount);
  }
  return "unknown";
}

std::vector<std::string> extract_consonants(const SegmentedSentence& sentence) {
  return keep_class(sentence, CharClass::Consonant);
}

std::vector<std::string> extract_vowels(const SegmentedSentence& sentence) {
  return keep_class(sentence, CharClass::DependentVowelSign);
}

std::vector<std::string> delete_random_chars(const SegmentedSentence& sentence,
                                             std::size_t n, RandomSource& rng) {
  std::vector<std::string> tokens;
  tokens.reserve(sentence.syllables.size());
  for (const auto& syllable : sentence.syllables) {
    std::u32string cps = utf8_to_u32(syllable);
    const std::size_t count = std::min(n, cps.empty() ? 0 : cps.size() - 1);
    if (count > 0) {
      const auto drop = rng.next_subset(cps.size(), count, false);
      std::u32string kept;
      for (std::size_t i = 0; i < cps.size(); ++i) {
        if (!std::binary_search(drop.begin(), drop.end(), i)) kept.push_back(cps[i]);
      }
      cps = std::move(kept);
    }
    tokens.push_back(u32_to_utf8(cps));
  }
  return tokens;
}

MaskOutcome mask_syllables(const SegmentedSentence& sentence, std::size_t k,
                           RandomSource& rng) {
  MaskOutcome outcome;
  const std::size_t n = sentence.syllables.size();
  if (!can_mask(n, k)) return outcome;
  outcome.status = MaskOutcome::Status::Masked;
  outcome.positions = rng.next_subset(n, k, true);
  outcome.tokens = sentence.syllables;
  for (std::size_t pos : outcome.positions) {
    outcome.tokens[pos] = std::string(kMaskToken);
  }
  return outcome;
}

std::optional<std::vector<std::string>> corrupt(const SegmentedSentence& sentence,
                                                const CorruptionSpec& spec,
                                                RandomSource& rng) {
  switch (spec.kind) {
    case CorruptionKind::ConsonantOnly: return extract_consonants(sentence);
    case CorruptionKind::VowelOnly: return extract_vowels(sentence);
    case CorruptionKind::RandomDelete:
      return delete_random_chars(sentence, spec.amount, rng);
    case CorruptionKind::Mask: {
      auto outcome = mask_syllables(sentence, spec.amount, rng);
      if (!outcome.masked()) return std::nullopt;
      return std::move(outcome.tokens);
    }
  }
  return std::nullopt;
}

CorruptedCorpus corrupt_corpus(const std::vector<SegmentedSentence>& corpus,
                               const CorruptionSpec& spec) {
  CorruptedCorpus out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SeededRandom rng(derive_seed(spec.seed, i));
    auto tokens = corrupt(corpus[i], spec, rng);
    if (!tokens) {
      out.skipped.push_back(i);
      continue;
    }
    out.source.push_back(join(*tokens, " "));
    out.target.push_back(to_syllable_line(corpus[i]));
    out.kept.push_back(i);
  }
  return out;
}

}  // namespace abugida
