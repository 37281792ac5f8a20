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

#include <cstddef>
#include <span>
#include <vector>

#include "abugida/reconstructor/model.hpp"

namespace abugida::reconstructor {

// logprob / length^alpha.
double normalized_score(double logprob, std::size_t length, double alpha);

// Argmax decoding. The result excludes the final </s>; at most max_len tokens
// are generated (</s> included), further capped by the model's max_length.
// <pad> and <s> are never produced.
template <typename T>
std::vector<TokenId> greedy_decode(const Transformer<T>& model,
                                   std::span<const TokenId> src,
                                   std::size_t max_len);

struct Hypothesis {
  std::vector<TokenId> tokens;  // includes </s> when the hypothesis finished
  double logprob = 0.0;
  double score = 0.0;           // normalized_score over tokens.size()
};

// All finished hypotheses, best first. Hypotheses still alive at max_len are
// treated as finished. Ties are broken towards the lexicographically lower
// token sequence.
template <typename T>
std::vector<Hypothesis> beam_search(const Transformer<T>& model,
                                    std::span<const TokenId> src,
                                    std::size_t beam, double alpha,
                                    std::size_t max_len);

// Best beam_search result without the final </s>.
template <typename T>
std::vector<TokenId> beam_decode(const Transformer<T>& model,
                                 std::span<const TokenId> src, std::size_t beam,
                                 double alpha, std::size_t max_len);

}  // namespace abugida::reconstructor
