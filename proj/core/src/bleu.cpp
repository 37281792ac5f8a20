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

#include "abugida/bleu.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "abugida/error.hpp"
#include "abugida/unicode.hpp"

namespace abugida {
namespace {

using NgramCounts = std::map<std::span<const std::string>, std::uint64_t,
                             decltype([](std::span<const std::string> a,
                                         std::span<const std::string> b) {
                               return std::lexicographical_compare(
                                   a.begin(), a.end(), b.begin(), b.end());
                             })>;

NgramCounts count_ngrams(const TokenLine& line, int n) {
  NgramCounts counts;
  const std::size_t order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= line.size(); ++i) {
    ++counts[std::span<const std::string>(line.data() + i, order)];
  }
  return counts;
}

void check_aligned(std::span<const TokenLine> candidates,
                   std::span<const TokenLine> references) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("BLEU: candidate and reference line counts differ");
  }
  if (candidates.empty()) throw std::invalid_argument("BLEU: empty corpus");
}

// Per-line contribution; reused by corpus_bleu to avoid a second pass.
void accumulate(const TokenLine& cand, const TokenLine& ref, int n,
                Precision& p) {
  if (cand.size() < static_cast<std::size_t>(n)) return;
  const auto cand_counts = count_ngrams(cand, n);
  const auto ref_counts = count_ngrams(ref, n);
  for (const auto& [gram, count] : cand_counts) {
    p.total += count;
    const auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) p.matches += std::min(count, it->second);
  }
}

}  // namespace

std::string BleuReport::to_string() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "BLEU = %.2f, p1/p2/p3/p4 = %.1f/%.1f/%.1f/%.1f, BP = %.4f, "
                "ratio = %llu/%llu",
                bleu, 100 * precisions[0].value(), 100 * precisions[1].value(),
                100 * precisions[2].value(), 100 * precisions[3].value(),
                brevity_penalty, static_cast<unsigned long long>(candidate_length),
                static_cast<unsigned long long>(reference_length));
  return buf;
}

Precision modified_precision(std::span<const TokenLine> candidates,
                             std::span<const TokenLine> references, int n) {
  check_aligned(candidates, references);
  if (n < 1) throw std::invalid_argument("BLEU: n-gram order must be >= 1");
  Precision p;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    accumulate(candidates[i], references[i], n, p);
  }
  if (p.total == 0) {
    throw UndefinedPrecisionError("no candidate has " + std::to_string(n) +
                                  " tokens");
  }
  return p;
}

double brevity_penalty(std::uint64_t candidate_length,
                       std::uint64_t reference_length) {
  if (candidate_length == 0 || reference_length == 0) {
    throw std::invalid_argument("brevity_penalty: lengths must be positive");
  }
  if (candidate_length > reference_length) return 1.0;
  return std::exp(1.0 - static_cast<double>(reference_length) /
                            static_cast<double>(candidate_length));
}

BleuReport corpus_bleu(std::span<const TokenLine> candidates,
                       std::span<const TokenLine> references) {
  check_aligned(candidates, references);
  BleuReport report;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    report.candidate_length += candidates[i].size();
    report.reference_length += references[i].size();
    for (int n = 1; n <= kBleuMaxOrder; ++n) {
      accumulate(candidates[i], references[i], n, report.precisions[n - 1]);
    }
  }
  for (int n = 1; n <= kBleuMaxOrder; ++n) {
    if (report.precisions[n - 1].total == 0) {
      throw UndefinedPrecisionError("no candidate has " + std::to_string(n) +
                                    " tokens");
    }
  }
  report.brevity_penalty =
      brevity_penalty(report.candidate_length, report.reference_length);
  double log_sum = 0.0;
  for (const auto& p : report.precisions) {
    if (p.matches == 0) return report;  // bleu stays 0
    log_sum += 0.25 * std::log(p.value());
  }
  report.bleu = 100.0 * report.brevity_penalty * std::exp(log_sum);
  return report;
}

BleuReport corpus_bleu_lines(const std::vector<std::string>& candidates,
                             const std::vector<std::string>& references) {
  std::vector<TokenLine> cands, refs;
  cands.reserve(candidates.size());
  refs.reserve(references.size());
  for (const auto& line : candidates) cands.push_back(split_whitespace(line));
  for (const auto& line : references) refs.push_back(split_whitespace(line));
  return corpus_bleu(cands, refs);
}

}  // namespace abugida
