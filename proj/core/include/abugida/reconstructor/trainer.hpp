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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "abugida/reconstructor/model.hpp"

namespace abugida::reconstructor {

// Encoded sentence pair; both sides end with </s>.
struct ParallelExample {
  std::vector<TokenId> src;
  std::vector<TokenId> tgt;
};

std::vector<ParallelExample> make_examples(const std::vector<std::string>& src,
                                           const std::vector<std::string>& tgt,
                                           const Vocab& src_vocab,
                                           const Vocab& tgt_vocab);

struct Evaluation {
  double cross_entropy = 0.0;  // unsmoothed, per target token
  double perplexity = 1.0;
  double bleu = 0.0;           // 0 when BLEU is undefined for the output
};

struct EvaluateOptions {
  bool bleu = true;
  std::size_t beam = 6;
  double alpha = 0.6;
};

Evaluation evaluate(const Model& model, std::span<const ParallelExample> data,
                    const EvaluateOptions& options = {});

struct ValidationRecord {
  std::size_t step = 0;
  std::size_t epoch = 0;
  double train_loss = 0.0;  // mean smoothed loss since the previous record
  Evaluation dev;
};

enum class StopReason { EarlyStopping, MaxEpochs, MaxSteps };

const char* stop_reason_name(StopReason reason);

struct TrainLog {
  std::vector<ValidationRecord> validations;
  std::size_t steps = 0;
  std::size_t epochs = 0;
  std::size_t best = 0;  // index into validations
  StopReason stop = StopReason::MaxEpochs;

  // Tab-separated table, one line per validation plus a summary line.
  std::string to_text() const;
};

struct TrainOptions {
  bool validation_bleu = true;
  std::function<void(const ValidationRecord&)> on_validation;
};

struct TrainResult {
  Model model;  // best-dev parameters (smoothed when exp_smoothing is on)
  TrainLog log;
};

// base_lr * min(1, sqrt(lr_decay_start / step)); step counts from 1.
double learning_rate(const ModelConfig& config, std::size_t step);

// Adam with clipping and inverse square-root decay. Validates at step 0, every
// valid_every steps (or every epoch when 0) and after the last step. Throws
// DivergenceError when the loss or any parameter becomes non-finite.
TrainResult train(Model model, std::span<const ParallelExample> train_data,
                  std::span<const ParallelExample> dev_data,
                  const TrainOptions& options = {});

}  // namespace abugida::reconstructor
