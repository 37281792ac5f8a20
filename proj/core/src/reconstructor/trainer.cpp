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

#include "abugida/reconstructor/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "abugida/bleu.hpp"
#include "abugida/error.hpp"
#include "abugida/reconstructor/decoder.hpp"

namespace abugida::reconstructor {
namespace {

TokenLine id_tokens(std::span<const TokenId> ids) {
  TokenLine out;
  out.reserve(ids.size());
  for (TokenId id : ids) {
    if (id == Vocab::kEos) break;
    out.push_back(std::to_string(id));
  }
  return out;
}

bool all_finite(std::span<const float> values) {
  return std::all_of(values.begin(), values.end(),
                     [](float v) { return std::isfinite(v); });
}

class Adam {
 public:
  Adam(const ModelConfig& config, std::size_t size)
      : beta1_(config.adam_beta1), beta2_(config.adam_beta2), eps_(config.adam_eps),
        m_(size, 0.0), v_(size, 0.0) {}

  void step(std::span<float> params, std::span<const float> grad, double lr) {
    ++t_;
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double g = grad[i];
      m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
      v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
      const double mhat = m_[i] / c1;
      const double vhat = v_[i] / c2;
      params[i] -= static_cast<float>(lr * mhat / (std::sqrt(vhat) + eps_));
    }
  }

 private:
  double beta1_, beta2_, eps_;
  std::vector<double> m_, v_;
  std::size_t t_ = 0;
};

// Groups a shuffled order into batches of roughly batch_tokens target tokens.
std::vector<std::vector<std::size_t>> make_batches(
    std::span<const ParallelExample> data, std::size_t batch_tokens,
    SeededRandom& rng) {
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.next_index(i)]);
  }
  std::vector<std::vector<std::size_t>> batches;
  std::vector<std::size_t> current;
  std::size_t tokens = 0;
  for (std::size_t idx : order) {
    current.push_back(idx);
    tokens += data[idx].tgt.size();
    if (tokens >= batch_tokens) {
      batches.push_back(std::move(current));
      current.clear();
      tokens = 0;
    }
  }
  if (!current.empty()) batches.push_back(std::move(current));
  return batches;
}

}  // namespace

std::vector<ParallelExample> make_examples(const std::vector<std::string>& src,
                                           const std::vector<std::string>& tgt,
                                           const Vocab& src_vocab,
                                           const Vocab& tgt_vocab) {
  if (src.size() != tgt.size()) {
    throw std::invalid_argument("source and target line counts differ: " +
                                std::to_string(src.size()) + " vs " +
                                std::to_string(tgt.size()));
  }
  std::vector<ParallelExample> out;
  out.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.push_back({src_vocab.encode(src[i]), tgt_vocab.encode(tgt[i])});
  }
  return out;
}

Evaluation evaluate(const Model& model, std::span<const ParallelExample> data,
                    const EvaluateOptions& options) {
  Evaluation ev;
  LossStats total;
  for (const auto& ex : data) total += model.forward(ex.src, ex.tgt).loss;
  if (total.tokens > 0) {
    ev.cross_entropy = total.nll / static_cast<double>(total.tokens);
    ev.perplexity = std::exp(ev.cross_entropy);
  }
  if (options.bleu && !data.empty()) {
    std::vector<TokenLine> hyps, refs;
    for (const auto& ex : data) {
      hyps.push_back(id_tokens(beam_decode(model, ex.src, options.beam, options.alpha,
                                           model.config().max_length)));
      refs.push_back(id_tokens(ex.tgt));
    }
    try {
      ev.bleu = corpus_bleu(hyps, refs).bleu;
    } catch (const UndefinedPrecisionError&) {
      ev.bleu = 0.0;
    }
  }
  return ev;
}

const char* stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::EarlyStopping: return "early-stopping";
    case StopReason::MaxEpochs: return "max-epochs";
    case StopReason::MaxSteps: return "max-steps";
  }
  return "unknown";
}

std::string TrainLog::to_text() const {
  std::ostringstream out;
  out << "step\tepoch\ttrain_loss\tcross_entropy\tperplexity\tbleu\n";
  out.precision(6);
  for (const auto& r : validations) {
    out << r.step << '\t' << r.epoch << '\t' << r.train_loss << '\t'
        << r.dev.cross_entropy << '\t' << r.dev.perplexity << '\t' << r.dev.bleu
        << '\n';
  }
  out << "# steps=" << steps << " epochs=" << epochs << " best_step="
      << (validations.empty() ? 0 : validations[best].step)
      << " stop=" << stop_reason_name(stop) << '\n';
  return out.str();
}

double learning_rate(const ModelConfig& config, std::size_t step) {
  if (step == 0 || step <= config.lr_decay_start) return config.base_lr;
  return config.base_lr *
         std::sqrt(static_cast<double>(config.lr_decay_start) / static_cast<double>(step));
}

TrainResult train(Model model, std::span<const ParallelExample> train_data,
                  std::span<const ParallelExample> dev_data,
                  const TrainOptions& options) {
  if (dev_data.empty()) throw std::invalid_argument("dev corpus is empty");
  if (train_data.empty()) throw std::invalid_argument("training corpus is empty");
  const ModelConfig cfg = model.config();
  const std::size_t n = model.parameter_count();

  SeededRandom shuffle_rng(derive_seed(cfg.seed, 1));
  SeededRandom dropout_rng(derive_seed(cfg.seed, 2));
  Adam adam(cfg, n);
  std::vector<float> grad(n);
  std::vector<float> smoothed(model.parameters().begin(), model.parameters().end());

  Model eval_model = model;
  Model best_model = model;
  TrainLog log;
  double best_ce = 0.0;
  std::size_t bad_validations = 0;
  double loss_sum = 0.0;
  std::size_t loss_tokens = 0;
  std::size_t step = 0;
  std::size_t epoch = 0;
  bool stop = false;
  const EvaluateOptions eval_opts{options.validation_bleu, cfg.beam_size,
                                  cfg.length_norm_alpha};

  auto validate = [&] {
    const auto params = model.parameters();
    auto dst = eval_model.parameters();
    if (cfg.exp_smoothing) {
      std::copy(smoothed.begin(), smoothed.end(), dst.begin());
    } else {
      std::copy(params.begin(), params.end(), dst.begin());
    }
    ValidationRecord rec;
    rec.step = step;
    rec.epoch = epoch;
    rec.train_loss = loss_tokens ? loss_sum / static_cast<double>(loss_tokens) : 0.0;
    rec.dev = evaluate(eval_model, dev_data, eval_opts);
    loss_sum = 0.0;
    loss_tokens = 0;
    log.validations.push_back(rec);
    if (options.on_validation) options.on_validation(rec);
    if (log.validations.size() == 1 || rec.dev.cross_entropy < best_ce) {
      best_ce = rec.dev.cross_entropy;
      log.best = log.validations.size() - 1;
      best_model = eval_model;
      bad_validations = 0;
    } else if (++bad_validations >= cfg.early_stop_patience) {
      log.stop = StopReason::EarlyStopping;
      stop = true;
    }
  };

  validate();
  std::size_t last_validated = 0;
  while (!stop && epoch < cfg.max_epochs) {
    ++epoch;
    for (const auto& batch : make_batches(train_data, cfg.batch_tokens, shuffle_rng)) {
      std::fill(grad.begin(), grad.end(), 0.0f);
      LossStats batch_loss;
      for (std::size_t idx : batch) {
        const auto& ex = train_data[idx];
        batch_loss += model.accumulate_gradients(
            ex.src, ex.tgt, grad, cfg.dropout > 0.0 ? &dropout_rng : nullptr);
      }
      if (!std::isfinite(batch_loss.smoothed)) {
        throw DivergenceError("non-finite loss at step " + std::to_string(step + 1));
      }
      const float inv_tokens = 1.0f / static_cast<float>(batch_loss.tokens);
      double norm2 = 0.0;
      for (float& g : grad) {
        g *= inv_tokens;
        norm2 += static_cast<double>(g) * g;
      }
      const double norm = std::sqrt(norm2);
      if (cfg.clip_norm > 0.0 && norm > cfg.clip_norm) {
        const auto scale = static_cast<float>(cfg.clip_norm / norm);
        for (float& g : grad) g *= scale;
      }
      ++step;
      adam.step(model.parameters(), grad, learning_rate(cfg, step));
      if (!all_finite(model.parameters())) {
        throw DivergenceError("non-finite parameters at step " + std::to_string(step));
      }
      if (cfg.exp_smoothing) {
        const double t = static_cast<double>(step);
        const double decay = std::min(cfg.exp_smoothing_decay, (1.0 + t) / (10.0 + t));
        const auto params = model.parameters();
        for (std::size_t i = 0; i < n; ++i) {
          smoothed[i] = static_cast<float>(decay * smoothed[i] + (1.0 - decay) * params[i]);
        }
      }
      loss_sum += batch_loss.smoothed;
      loss_tokens += batch_loss.tokens;

      if (cfg.valid_every > 0 && step % cfg.valid_every == 0) {
        validate();
        last_validated = step;
        if (stop) break;
      }
      if (cfg.max_steps > 0 && step >= cfg.max_steps) {
        log.stop = StopReason::MaxSteps;
        stop = true;
        break;
      }
    }
    if (cfg.valid_every == 0 && last_validated != step) {
      validate();
      last_validated = step;
    }
  }
  const bool early = stop && log.stop == StopReason::EarlyStopping;
  const StopReason reason =
      early ? StopReason::EarlyStopping : (stop ? StopReason::MaxSteps : StopReason::MaxEpochs);
  if (!early && last_validated != step) validate();
  log.stop = reason;
  log.steps = step;
  log.epochs = epoch;
  return {std::move(best_model), std::move(log)};
}

}  // namespace abugida::reconstructor
