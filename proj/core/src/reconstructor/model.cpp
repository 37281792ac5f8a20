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

#include "abugida/reconstructor/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abugida/error.hpp"

namespace abugida::reconstructor {
namespace {

constexpr double kNormEpsilon = 1e-6;

template <typename T>
using ColVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T>
class ParamView {
 public:
  ParamView(const T* data, const std::vector<TensorInfo>& tensors)
      : data_(data), tensors_(tensors) {}

  Eigen::Map<const Matrix<T>> mat(std::size_t id) const {
    const auto& t = tensors_[id];
    return {data_ + t.offset, static_cast<Eigen::Index>(t.rows),
            static_cast<Eigen::Index>(t.cols)};
  }
  Eigen::Map<const RowVector<T>> row(std::size_t id) const {
    const auto& t = tensors_[id];
    return {data_ + t.offset, static_cast<Eigen::Index>(t.size())};
  }

 private:
  const T* data_;
  const std::vector<TensorInfo>& tensors_;
};

template <typename T>
class GradView {
 public:
  GradView(T* data, const std::vector<TensorInfo>& tensors)
      : data_(data), tensors_(tensors) {}

  Eigen::Map<Matrix<T>> mat(std::size_t id) const {
    const auto& t = tensors_[id];
    return {data_ + t.offset, static_cast<Eigen::Index>(t.rows),
            static_cast<Eigen::Index>(t.cols)};
  }
  Eigen::Map<RowVector<T>> row(std::size_t id) const {
    const auto& t = tensors_[id];
    return {data_ + t.offset, static_cast<Eigen::Index>(t.size())};
  }

 private:
  T* data_;
  const std::vector<TensorInfo>& tensors_;
};

// ---------------------------------------------------------------------------
// Per-sublayer caches kept for the backward pass.

template <typename T>
struct AttentionCache {
  Matrix<T> q_in, kv_in, q, k, v, context;
  std::vector<Matrix<T>> probs;  // one Lq x Lk matrix per head
};

template <typename T>
struct NormCache {
  Matrix<T> xhat;
  ColVector<T> inv_std;
};

template <typename T>
struct FeedForwardCache {
  Matrix<T> input, pre, act;
};

template <typename T>
struct DropoutCache {
  Matrix<T> mask;  // empty: identity
};

template <typename T>
struct EncoderLayerCache {
  AttentionCache<T> self;
  DropoutCache<T> drop1;
  NormCache<T> norm1;
  FeedForwardCache<T> ffn;
  DropoutCache<T> drop2;
  NormCache<T> norm2;
};

template <typename T>
struct DecoderLayerCache {
  AttentionCache<T> self;
  DropoutCache<T> drop1;
  NormCache<T> norm1;
  AttentionCache<T> cross;
  DropoutCache<T> drop2;
  NormCache<T> norm2;
  FeedForwardCache<T> ffn;
  DropoutCache<T> drop3;
  NormCache<T> norm3;
};

// ---------------------------------------------------------------------------
// Building blocks.

template <typename T>
Matrix<T> linear(const ParamView<T>& p, const LinearIds& ids, const Matrix<T>& x) {
  Matrix<T> y = x * p.mat(ids.weight);
  y.rowwise() += p.row(ids.bias);
  return y;
}

// Accumulates weight/bias gradients, returns d(input).
template <typename T>
Matrix<T> linear_backward(const ParamView<T>& p, const GradView<T>& g,
                          const LinearIds& ids, const Matrix<T>& x,
                          const Matrix<T>& dy) {
  g.mat(ids.weight).noalias() += x.transpose() * dy;
  g.row(ids.bias) += dy.colwise().sum();
  return dy * p.mat(ids.weight).transpose();
}

// Row-wise softmax restricted to the first `valid` columns of each row when
// causal (row i sees columns 0..i).
template <typename T>
void softmax_rows(Matrix<T>& s, bool causal) {
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    const Eigen::Index width = causal ? std::min<Eigen::Index>(i + 1, s.cols())
                                      : s.cols();
    auto row = s.row(i);
    const T max = row.head(width).maxCoeff();
    T sum = 0;
    for (Eigen::Index j = 0; j < width; ++j) {
      row(j) = std::exp(row(j) - max);
      sum += row(j);
    }
    row.head(width) /= sum;
    for (Eigen::Index j = width; j < s.cols(); ++j) row(j) = 0;
  }
}

// Scaled dot-product attention over all heads. probs receives one matrix per
// head when non-null.
template <typename T>
Matrix<T> attend(const Matrix<T>& q, const Matrix<T>& k, const Matrix<T>& v,
                 std::size_t heads, bool causal, std::vector<Matrix<T>>* probs) {
  const Eigen::Index dh = q.cols() / static_cast<Eigen::Index>(heads);
  const T scale = T(1) / std::sqrt(static_cast<T>(dh));
  Matrix<T> context(q.rows(), q.cols());
  if (probs) probs->resize(heads);
  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    Matrix<T> s = (q.middleCols(c0, dh) * k.middleCols(c0, dh).transpose()) * scale;
    softmax_rows(s, causal);
    context.middleCols(c0, dh).noalias() = s * v.middleCols(c0, dh);
    if (probs) (*probs)[h] = std::move(s);
  }
  return context;
}

template <typename T>
Matrix<T> attention_forward(const ParamView<T>& p, const AttentionIds& ids,
                            std::size_t heads, const Matrix<T>& xq,
                            const Matrix<T>& xkv, bool causal,
                            AttentionCache<T>* cache) {
  Matrix<T> q = linear(p, ids.query, xq);
  Matrix<T> k = linear(p, ids.key, xkv);
  Matrix<T> v = linear(p, ids.value, xkv);
  Matrix<T> context = attend(q, k, v, heads, causal, cache ? &cache->probs : nullptr);
  Matrix<T> out = linear(p, ids.output, context);
  if (cache) {
    cache->q_in = xq;
    cache->kv_in = xkv;
    cache->q = std::move(q);
    cache->k = std::move(k);
    cache->v = std::move(v);
    cache->context = std::move(context);
  }
  return out;
}

// Adds d(query input) to dxq and d(key/value input) to dxkv.
template <typename T>
void attention_backward(const ParamView<T>& p, const GradView<T>& g,
                        const AttentionIds& ids, std::size_t heads,
                        const AttentionCache<T>& c, const Matrix<T>& dout,
                        Matrix<T>& dxq, Matrix<T>& dxkv) {
  const Matrix<T> dcontext = linear_backward(p, g, ids.output, c.context, dout);
  const Eigen::Index dh = c.q.cols() / static_cast<Eigen::Index>(heads);
  const T scale = T(1) / std::sqrt(static_cast<T>(dh));
  Matrix<T> dq(c.q.rows(), c.q.cols());
  Matrix<T> dk(c.k.rows(), c.k.cols());
  Matrix<T> dv(c.v.rows(), c.v.cols());
  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    const Matrix<T>& prob = c.probs[h];
    const auto dctx = dcontext.middleCols(c0, dh);
    Matrix<T> dprob = dctx * c.v.middleCols(c0, dh).transpose();
    dv.middleCols(c0, dh).noalias() = prob.transpose() * dctx;
    // Softmax Jacobian: dS = P * (dP - rowsum(dP * P)).
    const ColVector<T> dot = (dprob.array() * prob.array()).rowwise().sum();
    Matrix<T> ds = (prob.array() * (dprob.colwise() - dot).array()).matrix();
    dq.middleCols(c0, dh).noalias() = (ds * c.k.middleCols(c0, dh)) * scale;
    dk.middleCols(c0, dh).noalias() = (ds.transpose() * c.q.middleCols(c0, dh)) * scale;
  }
  dxq += linear_backward(p, g, ids.query, c.q_in, dq);
  dxkv += linear_backward(p, g, ids.key, c.kv_in, dk);
  dxkv += linear_backward(p, g, ids.value, c.kv_in, dv);
}

template <typename T>
Matrix<T> norm_forward(const ParamView<T>& p, const NormIds& ids,
                       const Matrix<T>& x, NormCache<T>* cache) {
  const Eigen::Index d = x.cols();
  const ColVector<T> mean = x.rowwise().mean();
  Matrix<T> centered = x.colwise() - mean;
  const ColVector<T> var = centered.array().square().rowwise().sum() / T(d);
  const ColVector<T> inv_std =
      (var.array() + T(kNormEpsilon)).rsqrt().matrix();
  Matrix<T> xhat = centered.array().colwise() * inv_std.array();
  Matrix<T> y = xhat.array().rowwise() * p.row(ids.gain).array();
  y.rowwise() += p.row(ids.bias);
  if (cache) {
    cache->xhat = std::move(xhat);
    cache->inv_std = inv_std;
  }
  return y;
}

template <typename T>
Matrix<T> norm_backward(const ParamView<T>& p, const GradView<T>& g,
                        const NormIds& ids, const NormCache<T>& c,
                        const Matrix<T>& dy) {
  const T d = static_cast<T>(dy.cols());
  g.row(ids.gain) += (dy.array() * c.xhat.array()).colwise().sum().matrix();
  g.row(ids.bias) += dy.colwise().sum();
  const Matrix<T> dxhat = dy.array().rowwise() * p.row(ids.gain).array();
  const ColVector<T> mean_dxhat = dxhat.rowwise().sum() / d;
  const ColVector<T> mean_dxhat_xhat =
      (dxhat.array() * c.xhat.array()).rowwise().sum() / d;
  Matrix<T> dx = dxhat.colwise() - mean_dxhat;
  dx -= (c.xhat.array().colwise() * mean_dxhat_xhat.array()).matrix();
  return dx.array().colwise() * c.inv_std.array();
}

template <typename T>
T sigmoid(T x) {
  return T(1) / (T(1) + std::exp(-x));
}

template <typename T>
Matrix<T> ffn_forward(const ParamView<T>& p, const FeedForwardIds& ids,
                      const Matrix<T>& x, FeedForwardCache<T>* cache) {
  Matrix<T> pre = linear(p, ids.in, x);
  Matrix<T> act = pre.unaryExpr([](T v) { return v * sigmoid(v); });
  Matrix<T> out = linear(p, ids.out, act);
  if (cache) {
    cache->input = x;
    cache->pre = std::move(pre);
    cache->act = std::move(act);
  }
  return out;
}

template <typename T>
Matrix<T> ffn_backward(const ParamView<T>& p, const GradView<T>& g,
                       const FeedForwardIds& ids, const FeedForwardCache<T>& c,
                       const Matrix<T>& dout) {
  const Matrix<T> dact = linear_backward(p, g, ids.out, c.act, dout);
  const Matrix<T> dswish = c.pre.unaryExpr([](T v) {
    const T s = sigmoid(v);
    return s + v * s * (T(1) - s);
  });
  const Matrix<T> dpre = dact.cwiseProduct(dswish);
  return linear_backward(p, g, ids.in, c.input, dpre);
}

template <typename T>
Matrix<T> dropout_forward(const Matrix<T>& x, double rate, SeededRandom* rng,
                          DropoutCache<T>& cache) {
  cache.mask.resize(0, 0);
  if (!rng || rate <= 0.0) return x;
  const T keep_scale = static_cast<T>(1.0 / (1.0 - rate));
  cache.mask.resize(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    cache.mask.data()[i] = rng->next_unit() < rate ? T(0) : keep_scale;
  }
  return x.cwiseProduct(cache.mask);
}

template <typename T>
Matrix<T> dropout_backward(const DropoutCache<T>& cache, const Matrix<T>& dy) {
  if (cache.mask.size() == 0) return dy;
  return dy.cwiseProduct(cache.mask);
}

template <typename T>
Matrix<T> embed(const ParamView<T>& p, std::size_t table,
                std::span<const TokenId> tokens, const Matrix<T>& positions) {
  const auto emb = p.mat(table);
  const T scale = std::sqrt(static_cast<T>(emb.cols()));
  Matrix<T> x(static_cast<Eigen::Index>(tokens.size()), emb.cols());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    x.row(r) = emb.row(tokens[i]) * scale + positions.row(r);
  }
  return x;
}

template <typename T>
void embed_backward(const GradView<T>& g, std::size_t table,
                    std::span<const TokenId> tokens, const Matrix<T>& dx) {
  auto demb = g.mat(table);
  const T scale = std::sqrt(static_cast<T>(demb.cols()));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    demb.row(tokens[i]) += dx.row(static_cast<Eigen::Index>(i)) * scale;
  }
}

template <typename T>
RowVector<T> log_softmax(const RowVector<T>& logits) {
  const T max = logits.maxCoeff();
  const T lse = max + std::log((logits.array() - max).exp().sum());
  return logits.array() - lse;
}

}  // namespace

// ---------------------------------------------------------------------------

template <typename T>
struct Transformer<T>::Workspace {
  std::vector<TokenId> src, dec_in, targets;
  DropoutCache<T> src_drop, tgt_drop;
  std::vector<EncoderLayerCache<T>> enc;
  Matrix<T> memory;
  std::vector<DecoderLayerCache<T>> dec;
  Matrix<T> dec_out;
  Matrix<T> probs;
};

template <typename T>
Transformer<T>::Transformer(const ModelConfig& config, std::size_t src_vocab,
                            std::size_t tgt_vocab)
    : config_(config), src_vocab_(src_vocab), tgt_vocab_(tgt_vocab) {
  config_.validate();
  if (src_vocab == 0 || tgt_vocab == 0) {
    throw ConfigError("vocabulary sizes must be positive");
  }
  const std::size_t d = config_.model_dim;
  src_embedding_ = add_tensor("src_embedding", src_vocab, d);
  tgt_embedding_ = add_tensor("tgt_embedding", tgt_vocab, d);
  for (std::size_t l = 0; l < config_.enc_depth; ++l) {
    const std::string name = "encoder." + std::to_string(l);
    EncoderLayerIds ids;
    ids.self_attention = add_attention(name + ".self_attn");
    ids.norm1 = add_norm(name + ".norm1");
    ids.ffn.in = add_linear(name + ".ffn.in", d, config_.ff_dim);
    ids.ffn.out = add_linear(name + ".ffn.out", config_.ff_dim, d);
    ids.norm2 = add_norm(name + ".norm2");
    encoder_.push_back(ids);
  }
  for (std::size_t l = 0; l < config_.dec_depth; ++l) {
    const std::string name = "decoder." + std::to_string(l);
    DecoderLayerIds ids;
    ids.self_attention = add_attention(name + ".self_attn");
    ids.norm1 = add_norm(name + ".norm1");
    ids.cross_attention = add_attention(name + ".cross_attn");
    ids.norm2 = add_norm(name + ".norm2");
    ids.ffn.in = add_linear(name + ".ffn.in", d, config_.ff_dim);
    ids.ffn.out = add_linear(name + ".ffn.out", config_.ff_dim, d);
    ids.norm3 = add_norm(name + ".norm3");
    decoder_.push_back(ids);
  }
  output_weight_ = config_.tied_output ? tgt_embedding_
                                       : add_tensor("output.weight", tgt_vocab, d);
  output_bias_ = add_tensor("output.bias", 1, tgt_vocab);

  std::size_t total = 0;
  for (const auto& t : tensors_) total += t.size();
  params_.assign(total, T(0));

  // Sinusoidal positions for every admissible index (decoder input included).
  const std::size_t rows = config_.max_length + 1;
  positions_.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d));
  for (std::size_t pos = 0; pos < rows; ++pos) {
    for (std::size_t i = 0; i < d; i += 2) {
      const double freq = std::pow(10000.0, -static_cast<double>(i) / d);
      positions_(pos, i) = static_cast<T>(std::sin(pos * freq));
      if (i + 1 < d) positions_(pos, i + 1) = static_cast<T>(std::cos(pos * freq));
    }
  }
}

template <typename T>
std::size_t Transformer<T>::add_tensor(std::string name, std::size_t rows,
                                       std::size_t cols) {
  std::size_t offset = 0;
  if (!tensors_.empty()) offset = tensors_.back().offset + tensors_.back().size();
  tensors_.push_back({std::move(name), offset, rows, cols});
  return tensors_.size() - 1;
}

template <typename T>
LinearIds Transformer<T>::add_linear(const std::string& name, std::size_t in,
                                     std::size_t out) {
  LinearIds ids;
  ids.weight = add_tensor(name + ".weight", in, out);
  ids.bias = add_tensor(name + ".bias", 1, out);
  return ids;
}

template <typename T>
AttentionIds Transformer<T>::add_attention(const std::string& name) {
  const std::size_t d = config_.model_dim;
  AttentionIds ids;
  ids.query = add_linear(name + ".query", d, d);
  ids.key = add_linear(name + ".key", d, d);
  ids.value = add_linear(name + ".value", d, d);
  ids.output = add_linear(name + ".output", d, d);
  return ids;
}

template <typename T>
NormIds Transformer<T>::add_norm(const std::string& name) {
  NormIds ids;
  ids.gain = add_tensor(name + ".gain", 1, config_.model_dim);
  ids.bias = add_tensor(name + ".bias", 1, config_.model_dim);
  return ids;
}

template <typename T>
void Transformer<T>::initialize(std::uint64_t seed) {
  SeededRandom rng(seed);
  std::fill(params_.begin(), params_.end(), T(0));
  for (const auto& t : tensors_) {
    const bool is_bias = t.name.ends_with(".bias");
    const bool is_gain = t.name.ends_with(".gain");
    T* data = params_.data() + t.offset;
    if (is_gain) {
      std::fill(data, data + t.size(), T(1));
    } else if (!is_bias) {
      const double limit = std::sqrt(6.0 / static_cast<double>(t.rows + t.cols));
      for (std::size_t i = 0; i < t.size(); ++i) {
        data[i] = static_cast<T>((2.0 * rng.next_unit() - 1.0) * limit);
      }
    }
  }
}

template <typename T>
std::size_t Transformer<T>::find_tensor(std::string_view name) const {
  for (std::size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].name == name) return i;
  }
  return static_cast<std::size_t>(-1);
}

template <typename T>
const T* Transformer<T>::target_embedding_data() const {
  return params_.data() + tensors_[tgt_embedding_].offset;
}

template <typename T>
const T* Transformer<T>::output_projection_data() const {
  return params_.data() + tensors_[output_weight_].offset;
}

template <typename T>
void Transformer<T>::check_lengths(std::size_t src, std::size_t tgt) const {
  if (src > config_.max_length || tgt > config_.max_length) {
    throw LengthExceededError("sequence length " + std::to_string(std::max(src, tgt)) +
                              " exceeds max_length " +
                              std::to_string(config_.max_length));
  }
  if (src == 0 || tgt == 0) {
    throw LengthExceededError("sequences must contain at least the end token");
  }
}

template <typename T>
LossStats Transformer<T>::run(std::span<const TokenId> src,
                              std::span<const TokenId> tgt, Workspace& ws,
                              SeededRandom* rng, Matrix<T>* logits_out) const {
  check_lengths(src.size(), tgt.size());
  const ParamView<T> p(params_.data(), tensors_);
  const std::size_t heads = config_.heads;
  const double rate = config_.dropout;

  ws.src.assign(src.begin(), src.end());
  ws.targets.assign(tgt.begin(), tgt.end());
  ws.dec_in.clear();
  ws.dec_in.push_back(Vocab::kBos);
  ws.dec_in.insert(ws.dec_in.end(), tgt.begin(), tgt.end() - 1);

  Matrix<T> x = dropout_forward(embed(p, src_embedding_, ws.src, positions_), rate,
                                rng, ws.src_drop);
  ws.enc.resize(encoder_.size());
  for (std::size_t l = 0; l < encoder_.size(); ++l) {
    const auto& ids = encoder_[l];
    auto& c = ws.enc[l];
    Matrix<T> a = attention_forward(p, ids.self_attention, heads, x, x, false, &c.self);
    a = dropout_forward(a, rate, rng, c.drop1);
    Matrix<T> y1 = norm_forward(p, ids.norm1, Matrix<T>(x + a), &c.norm1);
    Matrix<T> f = ffn_forward(p, ids.ffn, y1, &c.ffn);
    f = dropout_forward(f, rate, rng, c.drop2);
    x = norm_forward(p, ids.norm2, Matrix<T>(y1 + f), &c.norm2);
  }
  ws.memory = std::move(x);

  Matrix<T> y = dropout_forward(embed(p, tgt_embedding_, ws.dec_in, positions_), rate,
                                rng, ws.tgt_drop);
  ws.dec.resize(decoder_.size());
  for (std::size_t l = 0; l < decoder_.size(); ++l) {
    const auto& ids = decoder_[l];
    auto& c = ws.dec[l];
    Matrix<T> a = attention_forward(p, ids.self_attention, heads, y, y, true, &c.self);
    a = dropout_forward(a, rate, rng, c.drop1);
    Matrix<T> y1 = norm_forward(p, ids.norm1, Matrix<T>(y + a), &c.norm1);
    Matrix<T> b = attention_forward(p, ids.cross_attention, heads, y1, ws.memory,
                                    false, &c.cross);
    b = dropout_forward(b, rate, rng, c.drop2);
    Matrix<T> y2 = norm_forward(p, ids.norm2, Matrix<T>(y1 + b), &c.norm2);
    Matrix<T> f = ffn_forward(p, ids.ffn, y2, &c.ffn);
    f = dropout_forward(f, rate, rng, c.drop3);
    y = norm_forward(p, ids.norm3, Matrix<T>(y2 + f), &c.norm3);
  }
  ws.dec_out = std::move(y);

  Matrix<T> logits = ws.dec_out * p.mat(output_weight_).transpose();
  logits.rowwise() += p.row(output_bias_);

  const double eps = config_.label_smoothing;
  const double vocab = static_cast<double>(tgt_vocab_);
  LossStats stats;
  ws.probs.resize(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const RowVector<T> logp = log_softmax<T>(logits.row(i));
    const double gold = static_cast<double>(logp(ws.targets[i]));
    const double mean_logp = static_cast<double>(logp.sum()) / vocab;
    stats.nll -= gold;
    stats.smoothed -= (1.0 - eps) * gold + eps * mean_logp;
    ws.probs.row(i) = logp.array().exp();
  }
  stats.tokens = static_cast<std::size_t>(logits.rows());
  if (logits_out) *logits_out = std::move(logits);
  return stats;
}

template <typename T>
void Transformer<T>::backward(Workspace& ws, std::span<T> grad) const {
  const ParamView<T> p(params_.data(), tensors_);
  const GradView<T> g(grad.data(), tensors_);
  const std::size_t heads = config_.heads;

  // d(smoothed loss)/d(logits) = softmax - ((1 - eps) onehot + eps / V).
  const T eps = static_cast<T>(config_.label_smoothing);
  Matrix<T> dlogits = ws.probs.array() - eps / static_cast<T>(tgt_vocab_);
  for (std::size_t i = 0; i < ws.targets.size(); ++i) {
    dlogits(static_cast<Eigen::Index>(i), ws.targets[i]) -= T(1) - eps;
  }
  g.row(output_bias_) += dlogits.colwise().sum();
  g.mat(output_weight_).noalias() += dlogits.transpose() * ws.dec_out;
  Matrix<T> dy = dlogits * p.mat(output_weight_);

  Matrix<T> dmemory = Matrix<T>::Zero(ws.memory.rows(), ws.memory.cols());
  for (std::size_t l = decoder_.size(); l-- > 0;) {
    const auto& ids = decoder_[l];
    const auto& c = ws.dec[l];
    Matrix<T> dsum3 = norm_backward(p, g, ids.norm3, c.norm3, dy);
    Matrix<T> dy2 = dsum3;
    dy2 += ffn_backward(p, g, ids.ffn, c.ffn, dropout_backward(c.drop3, dsum3));
    Matrix<T> dsum2 = norm_backward(p, g, ids.norm2, c.norm2, dy2);
    Matrix<T> dy1 = dsum2;
    attention_backward(p, g, ids.cross_attention, heads, c.cross,
                       dropout_backward(c.drop2, dsum2), dy1, dmemory);
    Matrix<T> dsum1 = norm_backward(p, g, ids.norm1, c.norm1, dy1);
    Matrix<T> dx = dsum1;
    attention_backward(p, g, ids.self_attention, heads, c.self,
                       dropout_backward(c.drop1, dsum1), dx, dx);
    dy = std::move(dx);
  }
  embed_backward(g, tgt_embedding_, ws.dec_in, dropout_backward(ws.tgt_drop, dy));

  Matrix<T> dx = std::move(dmemory);
  for (std::size_t l = encoder_.size(); l-- > 0;) {
    const auto& ids = encoder_[l];
    const auto& c = ws.enc[l];
    Matrix<T> dsum2 = norm_backward(p, g, ids.norm2, c.norm2, dx);
    Matrix<T> dy1 = dsum2;
    dy1 += ffn_backward(p, g, ids.ffn, c.ffn, dropout_backward(c.drop2, dsum2));
    Matrix<T> dsum1 = norm_backward(p, g, ids.norm1, c.norm1, dy1);
    Matrix<T> dprev = dsum1;
    attention_backward(p, g, ids.self_attention, heads, c.self,
                       dropout_backward(c.drop1, dsum1), dprev, dprev);
    dx = std::move(dprev);
  }
  embed_backward(g, src_embedding_, ws.src, dropout_backward(ws.src_drop, dx));
}

template <typename T>
ForwardResult<T> Transformer<T>::forward(std::span<const TokenId> src,
                                         std::span<const TokenId> tgt) const {
  Workspace ws;
  ForwardResult<T> result;
  result.loss = run(src, tgt, ws, nullptr, &result.logits);
  return result;
}

template <typename T>
LossStats Transformer<T>::accumulate_gradients(std::span<const TokenId> src,
                                               std::span<const TokenId> tgt,
                                               std::span<T> grad,
                                               SeededRandom* dropout_rng) const {
  if (grad.size() != params_.size()) {
    throw std::invalid_argument("gradient buffer size mismatch");
  }
  Workspace ws;
  const LossStats stats = run(src, tgt, ws, dropout_rng, nullptr);
  backward(ws, grad);
  return stats;
}

template <typename T>
Matrix<T> Transformer<T>::encode(std::span<const TokenId> src) const {
  check_lengths(src.size(), 1);
  const ParamView<T> p(params_.data(), tensors_);
  Matrix<T> x = embed(p, src_embedding_, src, positions_);
  for (const auto& ids : encoder_) {
    Matrix<T> a =
        attention_forward<T>(p, ids.self_attention, config_.heads, x, x, false, nullptr);
    Matrix<T> y1 = norm_forward<T>(p, ids.norm1, Matrix<T>(x + a), nullptr);
    Matrix<T> f = ffn_forward<T>(p, ids.ffn, y1, nullptr);
    x = norm_forward<T>(p, ids.norm2, Matrix<T>(y1 + f), nullptr);
  }
  return x;
}

template <typename T>
DecoderState<T> Transformer<T>::start_decoding(std::span<const TokenId> src) const {
  const ParamView<T> p(params_.data(), tensors_);
  const Matrix<T> memory = encode(src);
  DecoderState<T> state;
  for (const auto& ids : decoder_) {
    state.cross_keys.push_back(linear(p, ids.cross_attention.key, memory));
    state.cross_values.push_back(linear(p, ids.cross_attention.value, memory));
    state.self_keys.emplace_back(0, static_cast<Eigen::Index>(config_.model_dim));
    state.self_values.emplace_back(0, static_cast<Eigen::Index>(config_.model_dim));
  }
  return state;
}

template <typename T>
RowVector<T> Transformer<T>::next_log_probs(DecoderState<T>& state,
                                            TokenId token) const {
  if (state.position > config_.max_length) {
    throw LengthExceededError("decoder position exceeds max_length");
  }
  const ParamView<T> p(params_.data(), tensors_);
  const std::size_t heads = config_.heads;
  const TokenId tokens[] = {token};
  const Matrix<T> pos_row = positions_.row(static_cast<Eigen::Index>(state.position));
  Matrix<T> y = embed<T>(p, tgt_embedding_, tokens, pos_row);

  for (std::size_t l = 0; l < decoder_.size(); ++l) {
    const auto& ids = decoder_[l];
    auto& keys = state.self_keys[l];
    auto& values = state.self_values[l];
    const Matrix<T> q = linear(p, ids.self_attention.query, y);
    keys.conservativeResize(keys.rows() + 1, Eigen::NoChange);
    values.conservativeResize(values.rows() + 1, Eigen::NoChange);
    keys.row(keys.rows() - 1) = linear(p, ids.self_attention.key, y);
    values.row(values.rows() - 1) = linear(p, ids.self_attention.value, y);
    Matrix<T> a = linear(p, ids.self_attention.output,
                         attend<T>(q, keys, values, heads, false, nullptr));
    Matrix<T> y1 = norm_forward<T>(p, ids.norm1, Matrix<T>(y + a), nullptr);

    const Matrix<T> q2 = linear(p, ids.cross_attention.query, y1);
    Matrix<T> b = linear(p, ids.cross_attention.output,
                         attend<T>(q2, state.cross_keys[l], state.cross_values[l],
                                   heads, false, nullptr));
    Matrix<T> y2 = norm_forward<T>(p, ids.norm2, Matrix<T>(y1 + b), nullptr);
    Matrix<T> f = ffn_forward<T>(p, ids.ffn, y2, nullptr);
    y = norm_forward<T>(p, ids.norm3, Matrix<T>(y2 + f), nullptr);
  }
  ++state.position;
  RowVector<T> logits = y * p.mat(output_weight_).transpose();
  logits += p.row(output_bias_);
  return log_softmax<T>(logits);
}

template class Transformer<float>;
template class Transformer<double>;

}  // namespace abugida::reconstructor
