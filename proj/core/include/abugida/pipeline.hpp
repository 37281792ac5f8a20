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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abugida/corruption.hpp"
#include "abugida/reconstructor/config.hpp"
#include "abugida/script_profiles.hpp"
#include "abugida/stats.hpp"

namespace abugida {

std::string_view tool_version();

// Contiguous in-order split: the first train_n lines, then dev_n, then test_n.
struct SplitSpec {
  std::size_t train_n = 18104;
  std::size_t dev_n = 1000;
  std::size_t test_n = 1000;

  std::size_t total() const { return train_n + dev_n + test_n; }
};

struct SplitLines {
  std::vector<std::string> train, dev, test;
};

// Throws InsufficientLinesError when lines.size() < spec.total(). Lines past
// the three partitions are ignored.
SplitLines split_lines(const std::vector<std::string>& lines, const SplitSpec& spec);

void split_file(const std::filesystem::path& in, const SplitSpec& spec,
                const std::filesystem::path& train_out,
                const std::filesystem::path& dev_out,
                const std::filesystem::path& test_out);

// Flat "key = value" file. Keys: script, input, output_dir, corruption, seed,
// train_n, dev_n, test_n, min_freq, train, model_config, and model.<field>
// for any ModelConfig field (applied after model_config). Relative paths are
// resolved against the config file's directory.
struct PipelineConfig {
  ScriptId script = ScriptId::Bengali;
  std::filesystem::path input;
  std::filesystem::path output_dir;
  std::string corruption = "consonant";
  std::uint64_t seed = 1111;
  SplitSpec split;
  std::uint64_t min_freq = 1;
  bool train = false;
  reconstructor::ModelConfig model;

  static PipelineConfig parse(std::string_view text,
                              const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);
};

struct RunManifest {
  std::string tool_version;
  std::string script;
  std::string corruption;
  std::uint64_t corruption_seed = 0;
  std::uint64_t model_seed = 0;
  std::string input;
  std::string input_digest;
  SplitSpec split;
  std::vector<std::pair<std::string, std::string>> outputs;  // stage -> file
  std::map<std::string, std::string> digests;                // file -> FNV-1a
  CorpusStats corpus;
  std::optional<MaskingStats> masking;
  std::uint64_t kept = 0;
  std::uint64_t skipped = 0;
  bool trained = false;
  std::optional<double> test_bleu;
  std::string test_bleu_report;

  std::string to_json() const;
};

using ProgressFn = std::function<void(std::string_view stage, std::string_view message)>;

// clean -> segment -> corrupt -> split -> vocab -> [train -> decode -> score].
// Outputs go to config.output_dir; manifest.json is written last. Any failure
// is rethrown as StageError naming the stage.
RunManifest run_pipeline(const PipelineConfig& config, const ProgressFn& progress = {});

}  // namespace abugida
