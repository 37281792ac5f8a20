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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace abugida::reconstructor {

// Transformer hyperparameters. Defaults follow the reference training recipe
// (2+2 layers, 8 heads, dropout 0.3, smoothing 0.1, lr 3e-4 with inverse
// square-root decay after 16k steps, beam 6, length penalty 0.6, seed 1111).
// model_dim / ff_dim / batching / optimizer constants are desk-scale choices.
struct ModelConfig {
  std::size_t enc_depth = 2;
  std::size_t dec_depth = 2;
  std::size_t heads = 8;
  std::size_t model_dim = 256;
  std::size_t ff_dim = 1024;
  double dropout = 0.3;
  double label_smoothing = 0.1;
  double base_lr = 0.0003;
  std::size_t lr_decay_start = 16000;
  std::size_t max_length = 200;
  std::size_t beam_size = 6;
  double length_norm_alpha = 0.6;
  std::size_t early_stop_patience = 10;
  std::uint64_t seed = 1111;
  bool tied_output = true;

  // Training loop knobs.
  std::size_t batch_tokens = 1000;   // target tokens per update
  std::size_t valid_every = 5000;    // steps between validations; 0 = per epoch
  std::size_t max_epochs = 100;
  std::size_t max_steps = 0;         // 0 = unlimited
  double clip_norm = 5.0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.98;
  double adam_eps = 1e-9;
  bool exp_smoothing = true;
  double exp_smoothing_decay = 0.9999;

  // Throws ConfigError when an invariant is violated.
  void validate() const;

  // Flat "key = value" text, one field per line, in declaration order.
  std::string to_text() const;

  // Unknown keys and malformed values raise ConfigError. Missing keys keep
  // their defaults.
  static ModelConfig parse(std::string_view text);
  static ModelConfig load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool operator==(const ModelConfig&) const = default;
};

// Parses "key = value" lines; '#' starts a comment. Shared with the pipeline
// configuration format.
std::map<std::string, std::string> parse_key_values(std::string_view text);

}  // namespace abugida::reconstructor
