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

// Command-line front end: one subcommand per processing stage plus the
// end-to-end pipeline.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abugida/bleu.hpp"
#include "abugida/cleaner.hpp"
#include "abugida/corruption.hpp"
#include "abugida/error.hpp"
#include "abugida/pipeline.hpp"
#include "abugida/reconstructor/checkpoint.hpp"
#include "abugida/reconstructor/decoder.hpp"
#include "abugida/reconstructor/trainer.hpp"
#include "abugida/stats.hpp"
#include "abugida/syllabifier.hpp"
#include "abugida/synthetic.hpp"
#include "abugida/text_io.hpp"
#include "abugida/vocab.hpp"

namespace {

using namespace abugida;
namespace rc = abugida::reconstructor;

std::vector<SegmentedSentence> read_syllable_corpus(const std::string& path,
                                                    ScriptId script) {
  std::vector<SegmentedSentence> out;
  for (const auto& line : read_lines(path)) out.push_back(sentence_from_line(line, script));
  return out;
}

int run_clean(const std::string& script, const std::string& stage_name,
              const std::string& in, const std::string& out) {
  const ScriptId id = script_from_string(script);
  std::vector<std::string> lines = read_lines(in);
  for (auto& line : lines) {
    if (stage_name == "1") {
      line = clean_first(line, id);
    } else if (stage_name == "2") {
      line = clean_second(line, id);
    } else {
      line = clean(line, id);
    }
  }
  write_lines(out, lines);
  return 0;
}

int run_segment(const std::string& script, const std::string& in, const std::string& out) {
  const ScriptId id = script_from_string(script);
  std::vector<std::string> lines = read_lines(in);
  for (auto& line : lines) line = to_syllable_line(segment(line, id));
  write_lines(out, lines);
  return 0;
}

struct CorruptArgs {
  std::string script, kind, in, out_src, out_tgt, skipped;
  std::uint64_t seed = 1111;
};

int run_corrupt(const CorruptArgs& a) {
  const ScriptId id = script_from_string(a.script);
  const auto corpus = read_syllable_corpus(a.in, id);
  const CorruptedCorpus cc = corrupt_corpus(corpus, CorruptionSpec::parse(a.kind, a.seed));
  write_lines(a.out_src, cc.source);
  if (!a.out_tgt.empty()) write_lines(a.out_tgt, cc.target);
  if (!a.skipped.empty()) {
    std::vector<std::string> lines;
    for (std::size_t idx : cc.skipped) lines.push_back(to_syllable_line(corpus[idx]));
    write_lines(a.skipped, lines);
  }
  std::cerr << "kept " << cc.kept.size() << ", skipped " << cc.skipped.size() << "\n";
  return 0;
}

int run_stats(const std::string& script, const std::string& in, std::size_t mask,
              std::uint64_t seed) {
  const ScriptId id = script_from_string(script);
  const auto corpus = read_syllable_corpus(in, id);
  const CorpusStats s = corpus_stats(corpus);
  std::printf("script\t%s\n", std::string(script_name(id)).c_str());
  std::printf("sentences\t%llu\n", static_cast<unsigned long long>(s.sentences));
  std::printf("syllables\t%llu\n", static_cast<unsigned long long>(s.syllables));
  std::printf("avg_syllables\t%.2f\n", s.avg_syllables_per_sentence());
  std::printf("consonants\t%llu\n", static_cast<unsigned long long>(s.consonants));
  std::printf("vowels\t%llu\n", static_cast<unsigned long long>(s.vowels));
  if (mask > 0) {
    const MaskingStats m = masking_stats(corpus, mask, seed);
    std::printf("mask\t%zu\n", m.mask_value);
    std::printf("masked_sentences\t%llu\n",
                static_cast<unsigned long long>(m.masked_sentences));
    std::printf("skipped_sentences\t%llu\n",
                static_cast<unsigned long long>(m.skipped_sentences));
    std::printf("total_syllables_masked\t%llu\n",
                static_cast<unsigned long long>(m.total_syllables_masked));
    std::printf("skipped_pct\t%s\n", m.skipped_pct_string().c_str());
  }
  return 0;
}

struct TrainArgs {
  std::string src, tgt, dev_src, dev_tgt, config, out, src_vocab, tgt_vocab;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_train(const TrainArgs& a) {
  rc::ModelConfig cfg = a.config.empty() ? rc::ModelConfig{} : rc::ModelConfig::load(a.config);
  if (a.seed_set) cfg.seed = a.seed;
  const auto src = read_lines(a.src);
  const auto tgt = read_lines(a.tgt);
  const Vocab sv = a.src_vocab.empty() ? Vocab::build(src) : Vocab::load(a.src_vocab);
  const Vocab tv = a.tgt_vocab.empty() ? Vocab::build(tgt) : Vocab::load(a.tgt_vocab);
  const auto train_data = rc::make_examples(src, tgt, sv, tv);
  const auto dev_data =
      rc::make_examples(read_lines(a.dev_src), read_lines(a.dev_tgt), sv, tv);
  rc::Model model(cfg, sv.size(), tv.size());
  model.initialize(cfg.seed);
  rc::TrainOptions opts;
  opts.on_validation = [](const rc::ValidationRecord& r) {
    std::fprintf(stderr, "step %zu epoch %zu train %.4f dev-ce %.4f ppl %.3f bleu %.2f\n",
                 r.step, r.epoch, r.train_loss, r.dev.cross_entropy, r.dev.perplexity,
                 r.dev.bleu);
  };
  rc::TrainResult result = rc::train(std::move(model), train_data, dev_data, opts);
  rc::save_model_dir(a.out, result.model, sv, tv);
  write_file(std::filesystem::path(a.out) / "train_log.tsv", result.log.to_text());
  std::fprintf(stderr, "stopped: %s after %zu steps\n",
               rc::stop_reason_name(result.log.stop), result.log.steps);
  return 0;
}

int run_decode(const std::string& model_dir, const std::string& in, const std::string& out,
               std::size_t beam, double alpha, bool greedy) {
  const rc::ModelBundle bundle = rc::load_model_dir(model_dir);
  const std::size_t max_len = bundle.model.config().max_length;
  std::vector<std::string> lines;
  for (const auto& line : read_lines(in)) {
    std::vector<TokenId> src = bundle.src_vocab.encode(line);
    if (src.size() > max_len) src.resize(max_len), src.back() = Vocab::kEos;
    const auto ids = greedy ? rc::greedy_decode(bundle.model, src, max_len)
                            : rc::beam_decode(bundle.model, src, beam, alpha, max_len);
    lines.push_back(bundle.tgt_vocab.decode(ids));
  }
  write_lines(out, lines);
  return 0;
}

int run_score(const std::string& hyp, const std::string& ref) {
  std::cout << corpus_bleu_lines(read_lines(hyp), read_lines(ref)).to_string() << "\n";
  return 0;
}

int run_pipeline_cmd(const std::string& config, std::uint64_t seed, bool seed_set) {
  PipelineConfig cfg = PipelineConfig::load(config);
  if (seed_set) cfg.seed = seed;
  const RunManifest m = run_pipeline(cfg, [](std::string_view stage, std::string_view msg) {
    std::cerr << "[" << stage << "] " << msg << "\n";
  });
  std::cerr << "kept " << m.kept << ", skipped " << m.skipped;
  if (m.test_bleu) std::cerr << ", test " << m.test_bleu_report;
  std::cerr << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syllable-level corruption and reconstruction toolkit for abugida scripts"};
  app.set_version_flag("--version", std::string(abugida::tool_version()));
  app.require_subcommand(1);

  std::string script, in, out, stage_name = "all";
  std::uint64_t seed = 1111;

  auto* clean_cmd = app.add_subcommand("clean", "Two-stage script cleaning");
  clean_cmd->add_option("--script", script, "Script id")->required();
  clean_cmd->add_option("--stage", stage_name, "1, 2 or all")
      ->check(CLI::IsMember({"1", "2", "all"}));
  clean_cmd->add_option("--in", in)->required();
  clean_cmd->add_option("--out", out)->required();

  auto* segment_cmd = app.add_subcommand("segment", "Syllable segmentation");
  segment_cmd->add_option("--script", script)->required();
  segment_cmd->add_option("--in", in)->required();
  segment_cmd->add_option("--out", out)->required();

  CorruptArgs corrupt_args;
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Corrupt syllable lines");
  corrupt_cmd->add_option("--script", corrupt_args.script)->required();
  corrupt_cmd->add_option("--kind", corrupt_args.kind)
      ->required()
      ->check(CLI::IsMember({"consonant", "vowel", "delete1", "delete2", "mask3", "mask5",
                             "mask8", "mask10"}));
  corrupt_cmd->add_option("--seed", corrupt_args.seed);
  corrupt_cmd->add_option("--in", corrupt_args.in, "Syllable lines")->required();
  corrupt_cmd->add_option("--out-src", corrupt_args.out_src)->required();
  corrupt_cmd->add_option("--out-tgt", corrupt_args.out_tgt,
                          "Aligned full syllable lines for kept sentences");
  corrupt_cmd->add_option("--skipped", corrupt_args.skipped);

  SplitSpec split_spec;
  std::string train_out, dev_out, test_out;
  auto* split_cmd = app.add_subcommand("split", "Contiguous train/dev/test split");
  split_cmd->add_option("--in", in)->required();
  split_cmd->add_option("--train", train_out)->required();
  split_cmd->add_option("--dev", dev_out)->required();
  split_cmd->add_option("--test", test_out)->required();
  split_cmd->add_option("--train-n", split_spec.train_n);
  split_cmd->add_option("--dev-n", split_spec.dev_n);
  split_cmd->add_option("--test-n", split_spec.test_n);

  std::size_t mask = 0;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus and masking statistics");
  stats_cmd->add_option("--script", script)->required();
  stats_cmd->add_option("--in", in, "Syllable lines")->required();
  stats_cmd->add_option("--mask", mask)->check(CLI::IsMember({3, 5, 8, 10}));
  stats_cmd->add_option("--seed", seed);

  std::uint64_t min_freq = 1;
  auto* vocab_cmd = app.add_subcommand("vocab", "Build a token vocabulary");
  vocab_cmd->add_option("--in", in)->required();
  vocab_cmd->add_option("--out", out)->required();
  vocab_cmd->add_option("--min-freq", min_freq);

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Train a reconstruction model");
  train_cmd->add_option("--src", train_args.src)->required();
  train_cmd->add_option("--tgt", train_args.tgt)->required();
  train_cmd->add_option("--dev-src", train_args.dev_src)->required();
  train_cmd->add_option("--dev-tgt", train_args.dev_tgt)->required();
  train_cmd->add_option("--config", train_args.config, "key = value model config");
  train_cmd->add_option("--out", train_args.out, "Model directory")->required();
  train_cmd->add_option("--src-vocab", train_args.src_vocab);
  train_cmd->add_option("--tgt-vocab", train_args.tgt_vocab);
  auto* train_seed = train_cmd->add_option("--seed", train_args.seed);

  std::string model_dir;
  std::size_t beam = 6;
  double alpha = 0.6;
  bool greedy = false;
  auto* decode_cmd = app.add_subcommand("decode", "Decode with a trained model");
  decode_cmd->add_option("--model", model_dir)->required();
  decode_cmd->add_option("--in", in)->required();
  decode_cmd->add_option("--out", out)->required();
  decode_cmd->add_option("--beam", beam)->check(CLI::PositiveNumber);
  decode_cmd->add_option("--alpha", alpha);
  decode_cmd->add_flag("--greedy", greedy);

  std::string hyp, ref;
  auto* score_cmd = app.add_subcommand("score", "Corpus BLEU");
  score_cmd->add_option("--hyp", hyp)->required();
  score_cmd->add_option("--ref", ref)->required();

  std::string config;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run every stage from a config file");
  pipeline_cmd->add_option("--config", config)->required();
  auto* pipeline_seed = pipeline_cmd->add_option("--seed", seed);

  SyntheticSpec synth;
  bool copy_task = false;
  std::size_t alphabet = 5, min_len = 3, max_len = 8;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic Bengali-script corpus");
  synth_cmd->add_option("--out", out)->required();
  synth_cmd->add_option("--sentences", synth.sentences);
  synth_cmd->add_option("--lexicon", synth.lexicon_size);
  synth_cmd->add_option("--fidelity", synth.vowel_fidelity);
  synth_cmd->add_option("--seed", synth.seed);
  synth_cmd->add_flag("--copy-task", copy_task, "Emit an identity-task token corpus");
  synth_cmd->add_option("--alphabet", alphabet, "Copy-task symbol count");
  synth_cmd->add_option("--min-len", min_len, "Copy-task minimum length");
  synth_cmd->add_option("--max-len", max_len, "Copy-task maximum length");

  CLI11_PARSE(app, argc, argv);

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "clean") return run_clean(script, stage_name, in, out);
    if (cmd == "segment") return run_segment(script, in, out);
    if (cmd == "corrupt") return run_corrupt(corrupt_args);
    if (cmd == "split") {
      split_file(in, split_spec, train_out, dev_out, test_out);
      return 0;
    }
    if (cmd == "stats") return run_stats(script, in, mask, seed);
    if (cmd == "vocab") {
      Vocab::build_from_file(in, min_freq).save(out);
      return 0;
    }
    if (cmd == "train") {
      train_args.seed_set = train_seed->count() > 0;
      return run_train(train_args);
    }
    if (cmd == "decode") return run_decode(model_dir, in, out, beam, alpha, greedy);
    if (cmd == "score") return run_score(hyp, ref);
    if (cmd == "pipeline") return run_pipeline_cmd(config, seed, pipeline_seed->count() > 0);
    if (cmd == "synth") {
      write_lines(out, copy_task
                           ? copy_task_corpus(synth.sentences, alphabet, min_len, max_len, synth.seed)
                           : synthetic_corpus(synth));
      return 0;
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << cmd << ": " << e.what() << "\n";
    return 1;
  }
  return 1;
}
