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

#include "abugida/reconstructor/checkpoint.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "abugida/error.hpp"
#include "abugida/text_io.hpp"

namespace abugida::reconstructor {
namespace {

constexpr char kMagic[8] = {'A', 'B', 'G', 'D', 'C', 'K', 'P', 'T'};
constexpr char kEnd[4] = {'E', 'N', 'D', '.'};

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename U>
void put(std::string& out, U value) {
  unsigned char bytes[sizeof(U)];
  std::memcpy(bytes, &value, sizeof(U));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(U));
  }
  out.append(reinterpret_cast<const char*>(bytes), sizeof(U));
}

void put_string(std::string& out, const std::string& s) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out += s;
}

class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  template <typename U>
  U get() {
    need(sizeof(U));
    unsigned char raw[sizeof(U)];
    std::memcpy(raw, bytes_.data() + pos_, sizeof(U));
    if constexpr (std::endian::native == std::endian::big) {
      std::reverse(raw, raw + sizeof(U));
    }
    pos_ += sizeof(U);
    U value;
    std::memcpy(&value, raw, sizeof(U));
    return value;
  }

  std::string get_bytes(std::size_t n) {
    need(n);
    std::string s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  std::string get_string() { return get_bytes(get<std::uint32_t>()); }

  bool at_end() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) corrupt("unexpected end of file");
  }

 public:
  [[noreturn]] static void corrupt(const std::string& what) {
    throw CheckpointError(CheckpointError::Kind::CorruptFile, "corrupt checkpoint: " + what);
  }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_checkpoint(const Model& model) {
  std::string out(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kCheckpointVersion);
  put_string(out, model.config().to_text());
  put<std::uint64_t>(out, model.src_vocab_size());
  put<std::uint64_t>(out, model.tgt_vocab_size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(model.tensors().size()));
  const auto params = model.parameters();
  for (const auto& t : model.tensors()) {
    put_string(out, t.name);
    put<std::uint64_t>(out, t.rows);
    put<std::uint64_t>(out, t.cols);
    for (std::size_t i = 0; i < t.size(); ++i) put<float>(out, params[t.offset + i]);
  }
  out.append(kEnd, sizeof(kEnd));
  return out;
}

Model parse_checkpoint(const std::string& bytes) {
  Reader in(bytes);
  if (in.get_bytes(sizeof(kMagic)) != std::string(kMagic, sizeof(kMagic))) {
    Reader::corrupt("bad magic bytes");
  }
  const auto version = in.get<std::uint32_t>();
  if (version != kCheckpointVersion) {
    throw CheckpointError(CheckpointError::Kind::VersionMismatch,
                          "checkpoint format version " + std::to_string(version) +
                              ", expected " + std::to_string(kCheckpointVersion));
  }
  ModelConfig config;
  try {
    config = ModelConfig::parse(in.get_string());
    config.validate();
  } catch (const ConfigError& e) {
    Reader::corrupt(std::string("config block: ") + e.what());
  }
  const auto src_vocab = in.get<std::uint64_t>();
  const auto tgt_vocab = in.get<std::uint64_t>();
  if (src_vocab == 0 || tgt_vocab == 0 || src_vocab > (1u << 24) || tgt_vocab > (1u << 24)) {
    Reader::corrupt("implausible vocabulary size");
  }
  Model model(config, src_vocab, tgt_vocab);
  const auto count = in.get<std::uint32_t>();
  if (count != model.tensors().size()) Reader::corrupt("tensor count mismatch");
  auto params = model.parameters();
  for (const auto& t : model.tensors()) {
    const std::string name = in.get_string();
    const auto rows = in.get<std::uint64_t>();
    const auto cols = in.get<std::uint64_t>();
    if (name != t.name || rows != t.rows || cols != t.cols) {
      Reader::corrupt("unexpected tensor " + name);
    }
    for (std::size_t i = 0; i < t.size(); ++i) params[t.offset + i] = in.get<float>();
  }
  if (in.get_bytes(sizeof(kEnd)) != std::string(kEnd, sizeof(kEnd)) || !in.at_end()) {
    Reader::corrupt("missing end marker");
  }
  return model;
}

void save_checkpoint(const Model& model, const std::filesystem::path& path) {
  write_file(path, serialize_checkpoint(model));
}

Model load_checkpoint(const std::filesystem::path& path) {
  std::string bytes;
  try {
    bytes = read_file(path);
  } catch (const IoError& e) {
    Reader::corrupt(e.what());
  }
  return parse_checkpoint(bytes);
}

Model load_checkpoint(const std::filesystem::path& path, std::size_t src_vocab,
                      std::size_t tgt_vocab) {
  Model model = load_checkpoint(path);
  if (model.src_vocab_size() != src_vocab || model.tgt_vocab_size() != tgt_vocab) {
    throw CheckpointError(
        CheckpointError::Kind::VersionMismatch,
        "checkpoint vocabulary sizes " + std::to_string(model.src_vocab_size()) + "/" +
            std::to_string(model.tgt_vocab_size()) + " do not match " +
            std::to_string(src_vocab) + "/" + std::to_string(tgt_vocab));
  }
  return model;
}

void save_model_dir(const std::filesystem::path& dir, const Model& model,
                    const Vocab& src_vocab, const Vocab& tgt_vocab) {
  std::filesystem::create_directories(dir);
  save_checkpoint(model, dir / "model.bin");
  model.config().save(dir / "config.txt");
  src_vocab.save(dir / "vocab.src");
  tgt_vocab.save(dir / "vocab.tgt");
}

ModelBundle load_model_dir(const std::filesystem::path& dir) {
  Vocab src = Vocab::load(dir / "vocab.src");
  Vocab tgt = Vocab::load(dir / "vocab.tgt");
  Model model = load_checkpoint(dir / "model.bin", src.size(), tgt.size());
  return {std::move(model), std::move(src), std::move(tgt)};
}

}  // namespace abugida::reconstructor
