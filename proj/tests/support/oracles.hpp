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

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "abugida/reconstructor/config.hpp"

namespace abugida::oracle {

using Line = std::vector<std::string>;

// Number of times `gram` occurs in `line` as a contiguous run.
inline std::size_t count_occurrences(const Line& line, const Line& gram) {
  std::size_t count = 0;
  if (gram.size() > line.size()) return 0;
  for (std::size_t i = 0; i + gram.size() <= line.size(); ++i) {
    bool same = true;
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (line[i + j] != gram[j]) {
        same = false;
        break;
      }
    }
    if (same) ++count;
  }
  return count;
}

struct NgramTally {
  double matches = 0;
  double total = 0;
};

// Clipped matches by scanning each candidate position and counting in both
// sides; duplicates are handled by visiting each distinct n-gram once.
inline NgramTally brute_force_precision(const std::vector<Line>& cands,
                                        const std::vector<Line>& refs, std::size_t n) {
  NgramTally t;
  for (std::size_t s = 0; s < cands.size(); ++s) {
    const Line& c = cands[s];
    if (c.size() < n) continue;
    t.total += static_cast<double>(c.size() - n + 1);
    std::vector<Line> seen;
    for (std::size_t i = 0; i + n <= c.size(); ++i) {
      Line gram(c.begin() + i, c.begin() + i + n);
      if (std::find(seen.begin(), seen.end(), gram) != seen.end()) continue;
      seen.push_back(gram);
      t.matches += static_cast<double>(
          std::min(count_occurrences(c, gram), count_occurrences(refs[s], gram)));
    }
  }
  return t;
}

// Returns -1 when some order has no candidate n-grams.
inline double brute_force_bleu(const std::vector<Line>& cands,
                               const std::vector<Line>& refs) {
  double log_sum = 0.0;
  bool zero = false;
  for (std::size_t n = 1; n <= 4; ++n) {
    const NgramTally t = brute_force_precision(cands, refs, n);
    if (t.total == 0) return -1.0;
    if (t.matches == 0) zero = true;
    else log_sum += 0.25 * std::log(t.matches / t.total);
  }
  if (zero) return 0.0;
  double c = 0, r = 0;
  for (std::size_t s = 0; s < cands.size(); ++s) {
    c += static_cast<double>(cands[s].size());
    r += static_cast<double>(refs[s].size());
  }
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return 100.0 * bp * std::exp(log_sum);
}

// Weight and bias shapes of an encoder-decoder transformer with tied or
// untied output projection, summed one tensor at a time.
inline std::size_t transformer_parameter_count(const reconstructor::ModelConfig& c,
                                               std::size_t src_vocab,
                                               std::size_t tgt_vocab) {
  const std::size_t d = c.model_dim;
  const std::size_t ff = c.ff_dim;
  auto linear = [](std::size_t in, std::size_t out) { return in * out + out; };
  const std::size_t attention = 4 * linear(d, d);
  const std::size_t norm = 2 * d;
  const std::size_t ffn = linear(d, ff) + linear(ff, d);
  std::size_t total = 0;
  total += src_vocab * d;  // source embedding
  total += tgt_vocab * d;  // target embedding
  total += c.enc_depth * (attention + norm + ffn + norm);
  total += c.dec_depth * (attention + norm + attention + norm + ffn + norm);
  if (!c.tied_output) total += tgt_vocab * d;
  total += tgt_vocab;  // output bias
  return total;
}

// All k-subsets of {0..n-1} with no two consecutive members, by enumeration
// of every bitmask.
inline std::vector<std::vector<std::size_t>> non_adjacent_subsets(std::size_t n,
                                                                  std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    }
    if (members.size() != k) continue;
    bool ok = true;
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (members[i] == members[i - 1] + 1) ok = false;
    }
    if (ok) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Upper-tail chi-square critical values at significance 0.01, by degrees of
// freedom (index = dof).
inline double chi_square_critical_001(std::size_t dof) {
  static const double kTable[] = {0.0,    6.635,  9.210,  11.345, 13.277, 15.086,
                                  16.812, 18.475, 20.090, 21.666, 23.209};
  return kTable[dof];
}

}  // namespace abugida::oracle
