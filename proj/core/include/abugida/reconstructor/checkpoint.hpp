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
#include <string>

#include "abugida/reconstructor/model.hpp"
#include "abugida/vocab.hpp"

namespace abugida::reconstructor {

inline constexpr std::uint32_t kCheckpointVersion = 1;

// Binary layout, little-endian throughout:
//   "ABGDCKPT" | u32 version | u32 len + config text | u64 src vocab |
//   u64 tgt vocab | u32 tensor count |
//   per tensor: u32 len + name, u64 rows, u64 cols, rows*cols float32 |
//   "END."
std::string serialize_checkpoint(const Model& model);
Model parse_checkpoint(const std::string& bytes);

void save_checkpoint(const Model& model, const std::filesystem::path& path);

// Throws CheckpointError: CorruptFile for unreadable, truncated or malformed
// files, VersionMismatch for an unknown format version.
Model load_checkpoint(const std::filesystem::path& path);

// As above; additionally VersionMismatch when the stored vocabulary sizes
// differ from the expected ones.
Model load_checkpoint(const std::filesystem::path& path, std::size_t src_vocab,
                      std::size_t tgt_vocab);

// A model directory holds model.bin, config.txt, vocab.src and vocab.tgt.
struct ModelBundle {
  Model model;
  Vocab src_vocab;
  Vocab tgt_vocab;
};

void save_model_dir(const std::filesystem::path& dir, const Model& model,
                    const Vocab& src_vocab, const Vocab& tgt_vocab);
ModelBundle load_model_dir(const std::filesystem::path& dir);

}  // namespace abugida::reconstructor
