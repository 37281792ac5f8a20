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

#include <cmath>
#include <limits>

#include "abugida/error.hpp"
#include "abugida/reconstructor/trainer.hpp"
#include "abugida/synthetic.hpp"

namespace abugida::reconstructor {
namespace {

ModelConfig small_config() {
  ModelConfig c;
  c.model_dim = 16;
  c.ff_dim = 32;
  c.heads = 2;
  c.dropout = 0.1;
  c.base_lr = 0.003;
  c.batch_tokens = 40;
  c.valid_every = 0;
  c.max_epochs = 3;
  c.max_length = 16;
  c.beam_size = 2;
  c.seed = 77;
  return c;
}

struct CopyData {
  Vocab vocab;
  std::vector<ParallelExample> train, dev;
};

CopyData copy_data() {
  const auto lines = copy_task_corpus(60, 5, 3, 6, 5);
  CopyData d;
  d.vocab = Vocab::build(lines);
  const std::vector<std::string> train(lines.begin(), lines.begin() + 50);
  const std::vector<std::string> dev(lines.begin() + 50, lines.end());
  d.train = make_examples(train, train, d.vocab, d.vocab);
  d.dev = make_examples(dev, dev, d.vocab, d.vocab);
  return d;
}

Model fresh(const ModelConfig& c, const Vocab& v) {
  Model m(c, v.size(), v.size());
  m.initialize(c.seed);
  return m;
}

TEST(LearningRate, ConstantThenInverseSquareRoot) {
  const ModelConfig c;  // base 3e-4, decay after 16000
  EXPECT_DOUBLE_EQ(learning_rate(c, 1), 3e-4);
  EXPECT_DOUBLE_EQ(learning_rate(c, 8000), 3e-4);
  EXPECT_DOUBLE_EQ(learning_rate(c, 16000), 3e-4);
  EXPECT_NEAR(learning_rate(c, 64000), 1.5e-4, 1e-15);
  EXPECT_NEAR(learning_rate(c, 32000), 3e-4 / std::sqrt(2.0), 1e-15);
}

TEST(MakeExamples, EncodesBothSides) {
  const Vocab v = Vocab::build({"a b", "c"});
  const auto ex = make_examples({"a b", "c"}, {"c", "a z"}, v, v);
  ASSERT_EQ(ex.size(), 2u);
  EXPECT_EQ(ex[0].src, (std::vector<TokenId>{v.id("a"), v.id("b"), Vocab::kEos}));
  EXPECT_EQ(ex[1].tgt, (std::vector<TokenId>{v.id("a"), Vocab::kUnk, Vocab::kEos}));
  EXPECT_THROW(make_examples({"a"}, {}, v, v), std::invalid_argument);
}

TEST(Evaluate, UniformModelHasVocabPerplexity) {
  const CopyData d = copy_data();
  const Model zero(small_config(), d.vocab.size(), d.vocab.size());
  const Evaluation e = evaluate(zero, d.dev, {.bleu = false});
  EXPECT_NEAR(e.cross_entropy, std::log(static_cast<double>(d.vocab.size())), 1e-5);
  EXPECT_NEAR(e.perplexity, static_cast<double>(d.vocab.size()), 1e-3);
  EXPECT_EQ(e.bleu, 0.0);
}

TEST(Train, DeterministicForOneSeed) {
  const CopyData d = copy_data();
  const ModelConfig c = small_config();
  const TrainResult a = train(fresh(c, d.vocab), d.train, d.dev);
  const TrainResult b = train(fresh(c, d.vocab), d.train, d.dev);
  EXPECT_EQ(a.log.to_text(), b.log.to_text());
  ASSERT_EQ(a.model.parameter_count(), b.model.parameter_count());
  EXPECT_TRUE(std::equal(a.model.parameters().begin(), a.model.parameters().end(),
                         b.model.parameters().begin()));
}

TEST(Train, ImprovesOnInitialDevLoss) {
  const CopyData d = copy_data();
  const TrainResult r = train(fresh(small_config(), d.vocab), d.train, d.dev);
  const auto& v = r.log.validations;
  ASSERT_GE(v.size(), 2u);
  EXPECT_EQ(v.front().step, 0u);
  EXPECT_EQ(v.back().step, r.log.steps);
  EXPECT_LT(v[r.log.best].dev.cross_entropy, v.front().dev.cross_entropy);
  for (const auto& rec : v) {
    EXPECT_GE(rec.dev.cross_entropy, v[r.log.best].dev.cross_entropy);
    EXPECT_GE(rec.dev.perplexity, 1.0);
  }
  EXPECT_EQ(r.log.epochs, 3u);
  EXPECT_EQ(r.log.stop, StopReason::MaxEpochs);
  // The returned model is the best validated one.
  const Evaluation again = evaluate(r.model, d.dev, {.bleu = false});
  EXPECT_NEAR(again.cross_entropy, v[r.log.best].dev.cross_entropy, 1e-9);
}

TEST(Train, ValidationScheduleAndCallback) {
  const CopyData d = copy_data();
  ModelConfig c = small_config();
  c.valid_every = 3;
  c.max_steps = 10;
  std::vector<std::size_t> seen;
  TrainOptions opts;
  opts.validation_bleu = false;
  opts.on_validation = [&](const ValidationRecord& r) { seen.push_back(r.step); };
  const TrainResult r = train(fresh(c, d.vocab), d.train, d.dev, opts);
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 3, 6, 9, 10}));
  EXPECT_EQ(r.log.steps, 10u);
  EXPECT_EQ(r.log.stop, StopReason::MaxSteps);
  EXPECT_STREQ(stop_reason_name(r.log.stop), "max-steps");
}

TEST(Train, EarlyStoppingWhenDevStalls) {
  const CopyData d = copy_data();
  ModelConfig c = small_config();
  c.base_lr = 0.0;
  c.dropout = 0.0;
  c.early_stop_patience = 2;
  c.max_epochs = 10;
  const TrainResult r = train(fresh(c, d.vocab), d.train, d.dev, {.validation_bleu = false});
  EXPECT_EQ(r.log.stop, StopReason::EarlyStopping);
  EXPECT_EQ(r.log.validations.size(), 3u);
  EXPECT_EQ(r.log.best, 0u);
  EXPECT_EQ(r.log.epochs, 2u);
  EXPECT_STREQ(stop_reason_name(r.log.stop), "early-stopping");
}

TEST(Train, NonFiniteParametersDiverge) {
  const CopyData d = copy_data();
  Model m = fresh(small_config(), d.vocab);
  m.parameters()[0] = std::numeric_limits<float>::quiet_NaN();
  m.parameters()[m.parameter_count() - 1] = std::numeric_limits<float>::infinity();
  EXPECT_THROW(train(std::move(m), d.train, d.dev, {.validation_bleu = false}), DivergenceError);
}

TEST(TrainLog, TextHasOneLinePerValidation) {
  const CopyData d = copy_data();
  ModelConfig c = small_config();
  c.max_epochs = 1;
  const TrainResult r = train(fresh(c, d.vocab), d.train, d.dev);
  const std::string text = r.log.to_text();
  const auto lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(static_cast<std::size_t>(lines), r.log.validations.size() + 2);  // header + summary
  EXPECT_NE(text.find("max-epochs"), std::string::npos);
}

}  // namespace
}  // namespace abugida::reconstructor
