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

#include "abugida/reconstructor/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abugida::reconstructor {
namespace {

bool can_emit(TokenId id) { return id != Vocab::kPad && id != Vocab::kBos; }

const std::vector<TokenId> kEndOnly = {Vocab::kEos};

std::span<const TokenId> nonempty(std::span<const TokenId> src) {
  return src.empty() ? std::span<const TokenId>(kEndOnly) : src;
}

template <typename T>
std::size_t step_limit(const Transformer<T>& model, std::size_t max_len) {
  return std::max<std::size_t>(1, std::min(max_len, model.config().max_length));
}

std::vector<TokenId> strip_end(std::vector<TokenId> tokens) {
  if (!tokens.empty() && tokens.back() == Vocab::kEos) tokens.pop_back();
  return tokens;
}

// Higher score first, then lexicographically lower tokens.
bool ranks_before(double score_a, std::span<const TokenId> a, double score_b,
                  std::span<const TokenId> b) {
  if (score_a != score_b) return score_a > score_b;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

double normalized_score(double logprob, std::size_t length, double alpha) {
  if (length == 0) return logprob;
  return logprob / std::pow(static_cast<double>(length), alpha);
}

template <typename T>
std::vector<TokenId> greedy_decode(const Transformer<T>& model,
                                   std::span<const TokenId> src,
                                   std::size_t max_len) {
  const std::size_t limit = step_limit(model, max_len);
  DecoderState<T> state = model.start_decoding(nonempty(src));
  std::vector<TokenId> out;
  TokenId prev = Vocab::kBos;
  for (std::size_t step = 0; step < limit; ++step) {
    const RowVector<T> logp = model.next_log_probs(state, prev);
    TokenId best = -1;
    for (Eigen::Index v = 0; v < logp.size(); ++v) {
      const auto id = static_cast<TokenId>(v);
      if (!can_emit(id)) continue;
      if (best < 0 || logp(v) > logp(best)) best = id;
    }
    if (best == Vocab::kEos) break;
    out.push_back(best);
    prev = best;
  }
  return out;
}

template <typename T>
std::vector<Hypothesis> beam_search(const Transformer<T>& model,
                                    std::span<const TokenId> src,
                                    std::size_t beam, double alpha,
                                    std::size_t max_len) {
  if (beam == 0) throw std::invalid_argument("beam must be >= 1");
  const std::size_t limit = step_limit(model, max_len);

  struct Live {
    std::vector<TokenId> tokens;
    double logprob = 0.0;
    DecoderState<T> state;
    RowVector<T> next;
  };
  struct Candidate {
    std::size_t parent;
    TokenId token;
    double logprob;
    std::vector<TokenId> tokens;
  };

  std::vector<Live> live(1);
  live[0].state = model.start_decoding(nonempty(src));
  live[0].next = model.next_log_probs(live[0].state, Vocab::kBos);
  std::vector<Hypothesis> finished;

  for (std::size_t step = 0; step < limit && !live.empty(); ++step) {
    const std::size_t width = beam - finished.size();
    std::vector<Candidate> candidates;
    for (std::size_t h = 0; h < live.size(); ++h) {
      for (Eigen::Index v = 0; v < live[h].next.size(); ++v) {
        const auto id = static_cast<TokenId>(v);
        if (!can_emit(id)) continue;
        Candidate c{h, id, live[h].logprob + static_cast<double>(live[h].next(v)),
                    live[h].tokens};
        c.tokens.push_back(id);
        candidates.push_back(std::move(c));
      }
    }
    const std::size_t keep = std::min(width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(),
                      [](const Candidate& a, const Candidate& b) {
                        return ranks_before(a.logprob, a.tokens, b.logprob, b.tokens);
                      });
    candidates.resize(keep);

    std::vector<Live> next_live;
    const bool last = step + 1 == limit;
    for (auto& c : candidates) {
      if (c.token == Vocab::kEos || last) {
        const double score = normalized_score(c.logprob, c.tokens.size(), alpha);
        finished.push_back({std::move(c.tokens), c.logprob, score});
        continue;
      }
      Live h;
      h.state = live[c.parent].state;
      h.next = model.next_log_probs(h.state, c.token);
      h.tokens = std::move(c.tokens);
      h.logprob = c.logprob;
      next_live.push_back(std::move(h));
    }
    live = std::move(next_live);
  }

  std::sort(finished.begin(), finished.end(),
            [](const Hypothesis& a, const Hypothesis& b) {
              return ranks_before(a.score, a.tokens, b.score, b.tokens);
            });
  return finished;
}

template <typename T>
std::vector<TokenId> beam_decode(const Transformer<T>& model,
                                 std::span<const TokenId> src, std::size_t beam,
                                 double alpha, std::size_t max_len) {
  auto hyps = beam_search(model, src, beam, alpha, max_len);
  if (hyps.empty()) return {};
  return strip_end(std::move(hyps.front().tokens));
}

#define ABUGIDA_INSTANTIATE_DECODER(T)                                             \
  template std::vector<TokenId> greedy_decode(const Transformer<T>&,               \
                                              std::span<const TokenId>,           \
                                              std::size_t);                       \
  template std::vector<Hypothesis> beam_search(const Transformer<T>&,              \
                                               std::span<const TokenId>,          \
                                               std::size_t, double, std::size_t); \
  template std::vector<TokenId> beam_decode(const Transformer<T>&,                 \
                                            std::span<const TokenId>,             \
                                            std::size_t, double, std::size_t);

ABUGIDA_INSTANTIATE_DECODER(float)
ABUGIDA_INSTANTIATE_DECODER(double)

#undef ABUGIDA_INSTANTIATE_DECODER

}  // namespace abugida::reconstructor
