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

#include <nlohmann/json.hpp>

#include "abugida/error.hpp"
#include "abugida/pipeline.hpp"
#include "abugida/synthetic.hpp"
#include "abugida/text_io.hpp"
#include "abugida/unicode.hpp"
#include "abugida/vocab.hpp"
#include "test_util.hpp"

namespace abugida {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("l" + std::to_string(i));
  return out;
}

TEST(Split, ContiguousInOrder) {
  const SplitLines s = split_lines(numbered(10), {6, 2, 2});
  EXPECT_EQ(s.train, (std::vector<std::string>{"l0", "l1", "l2", "l3", "l4", "l5"}));
  EXPECT_EQ(s.dev, (std::vector<std::string>{"l6", "l7"}));
  EXPECT_EQ(s.test, (std::vector<std::string>{"l8", "l9"}));
}

TEST(Split, ExtraLinesIgnoredAndShortCorpusRejected) {
  const SplitLines s = split_lines(numbered(12), {6, 2, 2});
  EXPECT_EQ(s.test.back(), "l9");
  EXPECT_THROW(split_lines(numbered(9), {6, 2, 2}), InsufficientLinesError);
  const SplitLines empty = split_lines({}, {0, 0, 0});
  EXPECT_TRUE(empty.train.empty() && empty.dev.empty() && empty.test.empty());
}

TEST(Split, DefaultSizes) {
  const SplitSpec spec;
  EXPECT_EQ(spec.train_n, 18104u);
  EXPECT_EQ(spec.dev_n, 1000u);
  EXPECT_EQ(spec.test_n, 1000u);
  EXPECT_EQ(spec.total(), 20104u);
}

TEST(Split, FileVariant) {
  const auto dir = testing::scratch_dir("split_file");
  write_lines(dir / "in.txt", numbered(5));
  split_file(dir / "in.txt", {3, 1, 1}, dir / "a", dir / "b", dir / "c");
  EXPECT_EQ(read_lines(dir / "a"), (std::vector<std::string>{"l0", "l1", "l2"}));
  EXPECT_EQ(read_lines(dir / "c"), (std::vector<std::string>{"l4"}));
}

TEST(PipelineConfig, ParsesKeysAndResolvesPaths) {
  const PipelineConfig c = PipelineConfig::parse(
      "script = thai\ninput = data/raw.txt\noutput_dir = /tmp/out\n"
      "corruption = mask5\nseed = 7\ntrain_n = 80\ndev_n = 10\ntest_n = 10\n"
      "min_freq = 2\ntrain = true\nmodel.model_dim = 16\nmodel.heads = 4\n",
      "/base");
  EXPECT_EQ(c.script, ScriptId::Thai);
  EXPECT_EQ(c.input, fs::path("/base/data/raw.txt"));
  EXPECT_EQ(c.output_dir, fs::path("/tmp/out"));
  EXPECT_EQ(c.corruption, "mask5");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.split.total(), 100u);
  EXPECT_EQ(c.min_freq, 2u);
  EXPECT_TRUE(c.train);
  EXPECT_EQ(c.model.model_dim, 16u);
  EXPECT_EQ(c.model.heads, 4u);
}

TEST(PipelineConfig, ModelFileThenOverrides) {
  const auto dir = testing::scratch_dir("pipeline_cfg");
  write_file(dir / "model.cfg", "model_dim = 32\nheads = 4");
  write_file(dir / "run.cfg",
             "input = raw.txt\noutput_dir = out\nmodel_config = model.cfg\nmodel.heads = 8\n");
  const PipelineConfig c = PipelineConfig::load(dir / "run.cfg");
  EXPECT_EQ(c.model.model_dim, 32u);
  EXPECT_EQ(c.model.heads, 8u);
  EXPECT_EQ(c.input, dir / "raw.txt");
}

TEST(PipelineConfig, RejectsBadInput) {
  EXPECT_THROW(PipelineConfig::parse("input = a\noutput_dir = b\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("output_dir = b\n"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("input = a\noutput_dir = b\ncorruption = mask4\n"),
               ConfigError);
  EXPECT_THROW(PipelineConfig::parse("input = a\noutput_dir = b\nscript = tamil\n"), Error);
  EXPECT_THROW(
      PipelineConfig::parse("input = a\noutput_dir = b\ntrain = yes\nmodel.heads = 3\n"),
      ConfigError);
}

class PipelineRun : public ::testing::Test {
 protected:
  fs::path dir;
  PipelineConfig config;

  void SetUp() override {
    dir = testing::scratch_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    SyntheticSpec spec;
    spec.sentences = 100;
    spec.min_sentence_syllables = 4;
    spec.max_sentence_syllables = 12;
    auto lines = synthetic_corpus(spec);
    lines[3] = "ক।";  // one short line so mask3 skips it
    write_lines(dir / "raw.txt", lines);
    config.input = dir / "raw.txt";
    config.output_dir = dir / "out";
    config.split = {80, 5, 5};
    config.seed = 5;
  }
};

TEST_F(PipelineRun, MaskThreeWithoutTraining) {
  config.corruption = "mask3";
  std::vector<std::string> stages;
  const RunManifest m = run_pipeline(config, [&](std::string_view s, std::string_view) {
    if (stages.empty() || stages.back() != s) stages.emplace_back(s);
  });
  EXPECT_EQ(stages, (std::vector<std::string>{"clean", "segment", "corrupt", "split", "vocab",
                                              "manifest"}));
  EXPECT_EQ(m.kept + m.skipped, 100u);
  EXPECT_GE(m.skipped, 1u);
  ASSERT_TRUE(m.masking.has_value());
  EXPECT_EQ(m.masking->total_syllables_masked, 3 * m.kept);
  EXPECT_FALSE(m.trained);

  const fs::path out = config.output_dir;
  const auto src = read_lines(out / "corpus.src");
  const auto tgt = read_lines(out / "corpus.tgt");
  ASSERT_EQ(src.size(), m.kept);
  ASSERT_EQ(tgt.size(), m.kept);
  EXPECT_EQ(read_lines(out / "skipped").size(), m.skipped);
  EXPECT_EQ(read_lines(out / "corpus.syl").size(), 100u);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto s = split_whitespace(src[i]);
    const auto t = split_whitespace(tgt[i]);
    ASSERT_EQ(s.size(), t.size());
    EXPECT_EQ(std::count(s.begin(), s.end(), "<mask>"), 3);
  }
  EXPECT_EQ(read_lines(out / "train.src").size(), 80u);
  EXPECT_EQ(read_lines(out / "test.tgt").size(), 5u);
  EXPECT_EQ(read_lines(out / "train.src").front(), src.front());

  const auto j = nlohmann::json::parse(read_file(out / "manifest.json"));
  EXPECT_EQ(j["corruption"], "mask3");
  EXPECT_EQ(j["input"]["path"], "raw.txt");
  EXPECT_EQ(j["input"]["fnv1a64"], fnv1a_hex(read_file(dir / "raw.txt")));
  EXPECT_EQ(j["stats"]["masking"]["k"], 3);
  for (const auto& o : j["outputs"]) {
    if (o.contains("fnv1a64")) {
      EXPECT_EQ(o["fnv1a64"], fnv1a_hex(read_file(out / o["file"].get<std::string>())));
    }
  }
}

TEST_F(PipelineRun, ConsonantCorpusAlignsWithTargets) {
  config.corruption = "consonant";
  const RunManifest m = run_pipeline(config);
  EXPECT_EQ(m.skipped, 0u);
  EXPECT_FALSE(m.masking.has_value());
  const auto src = read_lines(config.output_dir / "corpus.src");
  const auto tgt = read_lines(config.output_dir / "corpus.tgt");
  ASSERT_EQ(src.size(), 100u);
  EXPECT_EQ(src[0].size() > 0, true);
  EXPECT_LT(code_point_length(src[0]), code_point_length(tgt[0]));
  EXPECT_EQ(m.corpus.sentences, 100u);
  const Vocab v = Vocab::load(config.output_dir / "vocab.src");
  EXPECT_LE(v.size(), 5u + 20u);  // consonant-only tokens
}

TEST_F(PipelineRun, SameSeedSameBytes) {
  config.corruption = "delete2";
  run_pipeline(config);
  const std::string first = read_file(config.output_dir / "manifest.json");
  const std::string first_src = read_file(config.output_dir / "corpus.src");
  fs::remove_all(config.output_dir);
  run_pipeline(config);
  EXPECT_EQ(read_file(config.output_dir / "manifest.json"), first);
  EXPECT_EQ(read_file(config.output_dir / "corpus.src"), first_src);

  config.seed = 6;
  run_pipeline(config);
  EXPECT_NE(read_file(config.output_dir / "corpus.src"), first_src);
}

TEST_F(PipelineRun, FailuresNameTheStage) {
  config.split = {200, 5, 5};
  try {
    run_pipeline(config);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "split");
    EXPECT_EQ(std::string(e.what()).rfind("split: ", 0), 0u);
  }
  config.input = dir / "missing.txt";
  try {
    run_pipeline(config);
    FAIL() << "expected StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "clean");
  }
}

TEST_F(PipelineRun, TrainsDecodesAndScores) {
  config.corruption = "consonant";
  config.train = true;
  config.model.model_dim = 16;
  config.model.ff_dim = 32;
  config.model.heads = 2;
  config.model.max_epochs = 1;
  config.model.valid_every = 0;
  config.model.batch_tokens = 200;
  config.model.beam_size = 2;
  const RunManifest m = run_pipeline(config);
  EXPECT_TRUE(m.trained);
  ASSERT_TRUE(m.test_bleu.has_value());
  EXPECT_GE(*m.test_bleu, 0.0);
  EXPECT_EQ(read_lines(config.output_dir / "test.hyp").size(), 5u);
  EXPECT_TRUE(fs::exists(config.output_dir / "model" / "model.bin"));
  EXPECT_TRUE(fs::exists(config.output_dir / "model" / "train_log.tsv"));
}

}  // namespace
}  // namespace abugida
