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
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "abugida/random.hpp"
#include "abugida/reconstructor/config.hpp"
#include "abugida/vocab.hpp"

namespace abugida::reconstructor {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using RowVector = Eigen::Matrix<T, 1, Eigen::Dynamic>;

// A named slice of the flat parameter buffer.
struct TensorInfo {
  std::string name;
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const { return rows * cols; }
};

struct LinearIds {
  std::size_t weight = 0;  // in x out
  std::size_t bias = 0;    // 1 x out
};

struct AttentionIds {
  LinearIds query, key, value, output;
};

struct NormIds {
  std::size_t gain = 0;
  std::size_t bias = 0;
};

struct FeedForwardIds {
  LinearIds in, out;
};

struct EncoderLayerIds {
  AttentionIds self_attention;
  NormIds norm1;
  FeedForwardIds ffn;
  NormIds norm2;
};

struct DecoderLayerIds {
  AttentionIds self_attention;
  NormIds norm1;
  AttentionIds cross_attention;
  NormIds norm2;
  FeedForwardIds ffn;
  NormIds norm3;
};

// Summed (not averaged) loss terms for one sentence pair.
struct LossStats {
  double smoothed = 0.0;  // label-smoothed cross-entropy, summed over tokens
  double nll = 0.0;       // plain negative log-likelihood, summed over tokens
  std::size_t tokens = 0;

  LossStats& operator+=(const LossStats& o) {
    smoothed += o.smoothed;
    nll += o.nll;
    tokens += o.tokens;
    return *this;
  }
};

template <typename T>
struct ForwardResult {
  Matrix<T> logits;  // target length x target vocab
  LossStats loss;

  // Label-smoothed loss averaged per target token.
  double mean_loss() const { return loss.tokens ? loss.smoothed / loss.tokens : 0.0; }
};

// Incremental decoding state for one hypothesis: encoder memory projections
// plus the self-attention keys/values of every token fed so far.
template <typename T>
struct DecoderState {
  std::vector<Matrix<T>> cross_keys, cross_values;
  std::vector<Matrix<T>> self_keys, self_values;
  std::size_t position = 0;
};

// Post-norm encoder-decoder transformer (residual, dropout, layer norm after
// every sublayer), sinusoidal positions, swish feed-forward, target embedding
// shared with the output projection when tied_output is set.
//
// All parameters live in one flat buffer so the optimizer, smoothing,
// clipping and checkpointing work on a single span.
template <typename T>
class Transformer {
 public:
  // Allocates zeroed parameters. Throws ConfigError on an invalid config.
  Transformer(const ModelConfig& config, std::size_t src_vocab,
              std::size_t tgt_vocab);

  // Xavier-uniform weights and embeddings, zero biases, unit norm gains.
  void initialize(std::uint64_t seed);

  const ModelConfig& config() const { return config_; }
  std::size_t src_vocab_size() const { return src_vocab_; }
  std::size_t tgt_vocab_size() const { return tgt_vocab_; }

  std::span<T> parameters() { return params_; }
  std::span<const T> parameters() const { return params_; }
  std::size_t parameter_count() const { return params_.size(); }
  const std::vector<TensorInfo>& tensors() const { return tensors_; }
  // Index into tensors(), or npos.
  std::size_t find_tensor(std::string_view name) const;

  const T* target_embedding_data() const;
  const T* output_projection_data() const;

  // Logits and loss with dropout disabled. tgt ends with </s>; the decoder
  // input is <s> followed by tgt without its last token. Throws
  // LengthExceededError when either side is longer than max_length.
  ForwardResult<T> forward(std::span<const TokenId> src,
                           std::span<const TokenId> tgt) const;

  // Forward + backward for one pair. Adds d(loss.smoothed)/d(theta) into
  // grad, which must have parameter_count() entries. Dropout is active only
  // when dropout_rng is given.
  LossStats accumulate_gradients(std::span<const TokenId> src,
                                 std::span<const TokenId> tgt, std::span<T> grad,
                                 SeededRandom* dropout_rng) const;

  // Encoder output, one row per source position.
  Matrix<T> encode(std::span<const TokenId> src) const;

  DecoderState<T> start_decoding(std::span<const TokenId> src) const;

  // Feeds `token` at state.position and returns log-probabilities of the next
  // token. Equivalent to the last row of a full forward pass.
  RowVector<T> next_log_probs(DecoderState<T>& state, TokenId token) const;

  template <typename U>
  Transformer<U> cast() const {
    Transformer<U> out(config_, src_vocab_, tgt_vocab_);
    auto dst = out.parameters();
    for (std::size_t i = 0; i < params_.size(); ++i) {
      dst[i] = static_cast<U>(params_[i]);
    }
    return out;
  }

 private:
  struct Workspace;

  std::size_t add_tensor(std::string name, std::size_t rows, std::size_t cols);
  LinearIds add_linear(const std::string& name, std::size_t in, std::size_t out);
  AttentionIds add_attention(const std::string& name);
  NormIds add_norm(const std::string& name);

  void check_lengths(std::size_t src, std::size_t tgt) const;
  LossStats run(std::span<const TokenId> src, std::span<const TokenId> tgt,
                Workspace& ws, SeededRandom* dropout_rng,
                Matrix<T>* logits_out) const;
  void backward(Workspace& ws, std::span<T> grad) const;

  ModelConfig config_;
  std::size_t src_vocab_ = 0;
  std::size_t tgt_vocab_ = 0;
  std::vector<T> params_;
  std::vector<TensorInfo> tensors_;

  std::size_t src_embedding_ = 0;
  std::size_t tgt_embedding_ = 0;
  std::size_t output_weight_ = 0;  // == tgt_embedding_ when tied
  std::size_t output_bias_ = 0;
  std::vector<EncoderLayerIds> encoder_;
  std::vector<DecoderLayerIds> decoder_;
  Matrix<T> positions_;
};

using Model = Transformer<float>;

extern template class Transformer<float>;
extern template class Transformer<double>;

}  // namespace abugida::reconstructor
