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

#include <gtest/gtest.h>

#include <algorithm>

#include "abugida/error.hpp"
#include "abugida/reconstructor/checkpoint.hpp"
#include "abugida/reconstructor/decoder.hpp"
#include "abugida/text_io.hpp"
#include "test_util.hpp"

namespace abugida::reconstructor {
namespace {

ModelConfig small_config() {
  ModelConfig c;
  c.model_dim = 8;
  c.ff_dim = 16;
  c.heads = 2;
  c.max_length = 20;
  c.base_lr = 0.0125;
  return c;
}

Model random_model(bool tied = true) {
  ModelConfig c = small_config();
  c.tied_output = tied;
  Model m(c, 9, 11);
  m.initialize(42);
  return m;
}

bool same_parameters(const Model& a, const Model& b) {
  return a.parameter_count() == b.parameter_count() &&
         std::equal(a.parameters().begin(), a.parameters().end(), b.parameters().begin());
}

CheckpointError::Kind kind_of(const std::string& bytes) {
  try {
    parse_checkpoint(bytes);
  } catch (const CheckpointError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parse_checkpoint accepted malformed bytes";
  return CheckpointError::Kind::CorruptFile;
}

TEST(Checkpoint, RoundTripIsBitExact) {
  for (bool tied : {true, false}) {
    const Model m = random_model(tied);
    const std::string bytes = serialize_checkpoint(m);
    const Model back = parse_checkpoint(bytes);
    EXPECT_EQ(back.config(), m.config());
    EXPECT_EQ(back.src_vocab_size(), 9u);
    EXPECT_EQ(back.tgt_vocab_size(), 11u);
    EXPECT_TRUE(same_parameters(back, m));
    EXPECT_EQ(serialize_checkpoint(back), bytes);
  }
}

TEST(Checkpoint, LayoutHeaderAndTrailer) {
  const std::string bytes = serialize_checkpoint(random_model());
  EXPECT_EQ(bytes.substr(0, 8), "ABGDCKPT");
  EXPECT_EQ(bytes.substr(bytes.size() - 4), "END.");
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), kCheckpointVersion);
  EXPECT_EQ(bytes[9], 0);
}

TEST(Checkpoint, DecodingIsIdenticalAfterReload) {
  const Model m = random_model();
  const auto dir = abugida::testing::scratch_dir("ckpt_decode");
  save_checkpoint(m, dir / "m.bin");
  const Model back = load_checkpoint(dir / "m.bin");
  const std::vector<TokenId> src = {5, 6, 7, 8, 2};
  EXPECT_EQ(beam_decode(back, src, 3, 0.6, 10), beam_decode(m, src, 3, 0.6, 10));
}

TEST(Checkpoint, RejectsWrongVersion) {
  std::string bytes = serialize_checkpoint(random_model());
  bytes[8] = 2;
  EXPECT_EQ(kind_of(bytes), CheckpointError::Kind::VersionMismatch);
}

TEST(Checkpoint, RejectsCorruptBytes) {
  const std::string good = serialize_checkpoint(random_model());
  EXPECT_EQ(kind_of(""), CheckpointError::Kind::CorruptFile);
  EXPECT_EQ(kind_of("NOTACKPT" + good.substr(8)), CheckpointError::Kind::CorruptFile);
  EXPECT_EQ(kind_of(good.substr(0, good.size() - 1)), CheckpointError::Kind::CorruptFile);
  EXPECT_EQ(kind_of(good.substr(0, good.size() / 2)), CheckpointError::Kind::CorruptFile);
  EXPECT_EQ(kind_of(good + "x"), CheckpointError::Kind::CorruptFile);
  for (std::size_t cut : {9u, 13u, 40u, 200u}) {
    EXPECT_EQ(kind_of(good.substr(0, cut)), CheckpointError::Kind::CorruptFile) << cut;
  }
}

TEST(Checkpoint, MissingFileIsCorrupt) {
  try {
    load_checkpoint("/nonexistent/abugida/model.bin");
    FAIL() << "expected CheckpointError";
  } catch (const CheckpointError& e) {
    EXPECT_EQ(e.kind(), CheckpointError::Kind::CorruptFile);
  }
}

TEST(Checkpoint, VocabSizeMismatch) {
  const auto dir = abugida::testing::scratch_dir("ckpt_vocab");
  save_checkpoint(random_model(), dir / "m.bin");
  EXPECT_NO_THROW(load_checkpoint(dir / "m.bin", 9, 11));
  try {
    load_checkpoint(dir / "m.bin", 9, 12);
    FAIL() << "expected CheckpointError";
  } catch (const CheckpointError& e) {
    EXPECT_EQ(e.kind(), CheckpointError::Kind::VersionMismatch);
  }
}

TEST(ModelDir, SavesAndLoadsBundle) {
  const Vocab src = Vocab::build({"a b c d"});
  const Vocab tgt = Vocab::build({"p q r s t u"});
  ModelConfig c = small_config();
  Model m(c, src.size(), tgt.size());
  m.initialize(3);
  const auto dir = abugida::testing::scratch_dir("model_dir");
  save_model_dir(dir, m, src, tgt);
  for (const char* f : {"model.bin", "config.txt", "vocab.src", "vocab.tgt"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_EQ(ModelConfig::load(dir / "config.txt"), c);
  const ModelBundle b = load_model_dir(dir);
  EXPECT_EQ(b.src_vocab, src);
  EXPECT_EQ(b.tgt_vocab, tgt);
  EXPECT_TRUE(same_parameters(b.model, m));

  // Vocabulary files out of step with the weights.
  Vocab::build({"a"}).save(dir / "vocab.tgt");
  EXPECT_THROW(load_model_dir(dir), CheckpointError);
}

}  // namespace
}  // namespace abugida::reconstructor
