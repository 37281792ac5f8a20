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

#include "abugida/pipeline.hpp"

#include <charconv>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "abugida/bleu.hpp"
#include "abugida/cleaner.hpp"
#include "abugida/error.hpp"
#include "abugida/reconstructor/checkpoint.hpp"
#include "abugida/reconstructor/decoder.hpp"
#include "abugida/reconstructor/trainer.hpp"
#include "abugida/syllabifier.hpp"
#include "abugida/text_io.hpp"
#include "abugida/vocab.hpp"

#ifndef ABUGIDA_VERSION
#define ABUGIDA_VERSION "0.0.0"
#endif

namespace abugida {
namespace {

namespace fs = std::filesystem;
namespace rc = reconstructor;

template <typename T>
T parse_unsigned(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_flag(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + value + "'");
}

fs::path resolve(const fs::path& base, const std::string& value) {
  fs::path p(value);
  return p.is_absolute() || base.empty() ? p : base / p;
}

// Runs fn, converting any exception into a StageError for `stage`.
template <typename Fn>
auto stage(std::string_view name, const ProgressFn& progress, Fn&& fn) {
  if (progress) progress(name, "start");
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(std::string(name), e.what());
  }
}

}  // namespace

std::string_view tool_version() { return ABUGIDA_VERSION; }

SplitLines split_lines(const std::vector<std::string>& lines, const SplitSpec& spec) {
  if (lines.size() < spec.total()) {
    throw InsufficientLinesError("split needs " + std::to_string(spec.total()) +
                                 " lines, corpus has " + std::to_string(lines.size()));
  }
  SplitLines out;
  auto it = lines.begin();
  out.train.assign(it, it + spec.train_n);
  it += spec.train_n;
  out.dev.assign(it, it + spec.dev_n);
  it += spec.dev_n;
  out.test.assign(it, it + spec.test_n);
  return out;
}

void split_file(const fs::path& in, const SplitSpec& spec, const fs::path& train_out,
                const fs::path& dev_out, const fs::path& test_out) {
  const SplitLines parts = split_lines(read_lines(in), spec);
  write_lines(train_out, parts.train);
  write_lines(dev_out, parts.dev);
  write_lines(test_out, parts.test);
}

PipelineConfig PipelineConfig::parse(std::string_view text, const fs::path& base_dir) {
  PipelineConfig cfg;
  std::string model_text;
  std::string model_overrides;
  for (const auto& [key, value] : rc::parse_key_values(text)) {
    if (key == "script") {
      cfg.script = script_from_string(value);
    } else if (key == "input") {
      cfg.input = resolve(base_dir, value);
    } else if (key == "output_dir") {
      cfg.output_dir = resolve(base_dir, value);
    } else if (key == "corruption") {
      CorruptionSpec::parse(value);  // validates the name
      cfg.corruption = value;
    } else if (key == "seed") {
      cfg.seed = parse_unsigned<std::uint64_t>(key, value);
    } else if (key == "train_n") {
      cfg.split.train_n = parse_unsigned<std::size_t>(key, value);
    } else if (key == "dev_n") {
      cfg.split.dev_n = parse_unsigned<std::size_t>(key, value);
    } else if (key == "test_n") {
      cfg.split.test_n = parse_unsigned<std::size_t>(key, value);
    } else if (key == "min_freq") {
      cfg.min_freq = parse_unsigned<std::uint64_t>(key, value);
    } else if (key == "train") {
      cfg.train = parse_flag(key, value);
    } else if (key == "model_config") {
      model_text = read_file(resolve(base_dir, value));
    } else if (key.starts_with("model.")) {
      model_overrides += key.substr(6) + " = " + value + "\n";
    } else {
      throw ConfigError("unknown pipeline key '" + key + "'");
    }
  }
  cfg.model = rc::ModelConfig::parse(model_text + "\n" + model_overrides);
  if (cfg.input.empty()) throw ConfigError("pipeline config needs 'input'");
  if (cfg.output_dir.empty()) throw ConfigError("pipeline config needs 'output_dir'");
  if (cfg.train) cfg.model.validate();
  return cfg;
}

PipelineConfig PipelineConfig::load(const fs::path& path) {
  return parse(read_file(path), path.parent_path());
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["script"] = script;
  j["corruption"] = corruption;
  j["seeds"] = {{"corruption", corruption_seed}, {"model", model_seed}};
  j["input"] = {{"path", input}, {"fnv1a64", input_digest}};
  j["split"] = {{"policy", "contiguous-in-order"},
                {"train_n", split.train_n},
                {"dev_n", split.dev_n},
                {"test_n", split.test_n}};
  nlohmann::ordered_json outs = nlohmann::ordered_json::array();
  for (const auto& [stage_name, file] : outputs) {
    nlohmann::ordered_json o = {{"stage", stage_name}, {"file", file}};
    if (auto it = digests.find(file); it != digests.end()) o["fnv1a64"] = it->second;
    outs.push_back(o);
  }
  j["outputs"] = outs;
  j["stats"] = {{"sentences", corpus.sentences},
                {"syllables", corpus.syllables},
                {"consonants", corpus.consonants},
                {"vowels", corpus.vowels},
                {"kept", kept},
                {"skipped", skipped}};
  if (masking) {
    j["stats"]["masking"] = {{"k", masking->mask_value},
                             {"masked_sentences", masking->masked_sentences},
                             {"skipped_sentences", masking->skipped_sentences},
                             {"total_syllables_masked", masking->total_syllables_masked},
                             {"skipped_pct", masking->skipped_pct_string()}};
  }
  j["trained"] = trained;
  if (test_bleu) {
    j["test"] = {{"bleu", *test_bleu}, {"report", test_bleu_report}};
  }
  return j.dump(2) + "\n";
}

RunManifest run_pipeline(const PipelineConfig& config, const ProgressFn& progress) {
  const fs::path out = config.output_dir;
  RunManifest manifest;
  manifest.tool_version = std::string(tool_version());
  manifest.script = std::string(script_name(config.script));
  manifest.corruption = config.corruption;
  manifest.corruption_seed = config.seed;
  manifest.model_seed = config.model.seed;
  manifest.input = config.input.filename().string();
  manifest.split = config.split;

  auto emit = [&](std::string stage_name, const std::string& file,
                  const std::vector<std::string>& lines) {
    write_lines(out / file, lines);
    manifest.outputs.emplace_back(std::move(stage_name), file);
    manifest.digests[file] = fnv1a_hex(read_file(out / file));
  };

  const std::vector<std::string> raw = stage("clean", progress, [&] {
    fs::create_directories(out);
    std::string bytes = read_file(config.input);
    manifest.input_digest = fnv1a_hex(bytes);
    return read_lines(config.input);
  });

  const std::vector<std::string> cleaned = stage("clean", progress, [&] {
    std::vector<std::string> lines;
    lines.reserve(raw.size());
    for (const auto& line : raw) lines.push_back(clean(line, config.script));
    emit("clean", "corpus.clean", lines);
    return lines;
  });

  const std::vector<SegmentedSentence> segmented = stage("segment", progress, [&] {
    std::vector<SegmentedSentence> sentences;
    std::vector<std::string> lines;
    for (const auto& line : cleaned) {
      sentences.push_back(segment(line, config.script));
      lines.push_back(to_syllable_line(sentences.back()));
    }
    emit("segment", "corpus.syl", lines);
    manifest.corpus = corpus_stats(sentences);
    return sentences;
  });

  const CorruptedCorpus corrupted = stage("corrupt", progress, [&] {
    const CorruptionSpec spec = CorruptionSpec::parse(config.corruption, config.seed);
    CorruptedCorpus cc = corrupt_corpus(segmented, spec);
    emit("corrupt", "corpus.src", cc.source);
    emit("corrupt", "corpus.tgt", cc.target);
    std::vector<std::string> skipped;
    for (std::size_t idx : cc.skipped) {
      skipped.push_back(to_syllable_line(segmented[idx]));
    }
    emit("corrupt", "skipped", skipped);
    manifest.kept = cc.kept.size();
    manifest.skipped = cc.skipped.size();
    if (spec.kind == CorruptionKind::Mask) {
      manifest.masking = summarize_masking(spec.amount, segmented.size(), cc.kept.size());
    }
    return cc;
  });

  const auto parts = stage("split", progress, [&] {
    SplitLines s = split_lines(corrupted.source, config.split);
    SplitLines t = split_lines(corrupted.target, config.split);
    emit("split", "train.src", s.train);
    emit("split", "train.tgt", t.train);
    emit("split", "dev.src", s.dev);
    emit("split", "dev.tgt", t.dev);
    emit("split", "test.src", s.test);
    emit("split", "test.tgt", t.test);
    return std::pair{std::move(s), std::move(t)};
  });
  const SplitLines& src_parts = parts.first;
  const SplitLines& tgt_parts = parts.second;

  const auto vocabs = stage("vocab", progress, [&] {
    Vocab sv = Vocab::build(src_parts.train, config.min_freq);
    Vocab tv = Vocab::build(tgt_parts.train, config.min_freq);
    sv.save(out / "vocab.src");
    tv.save(out / "vocab.tgt");
    for (const char* f : {"vocab.src", "vocab.tgt"}) {
      manifest.outputs.emplace_back("vocab", f);
      manifest.digests[f] = fnv1a_hex(read_file(out / f));
    }
    return std::pair{std::move(sv), std::move(tv)};
  });
  const Vocab& src_vocab = vocabs.first;
  const Vocab& tgt_vocab = vocabs.second;

  if (config.train) {
    rc::Model model = stage("train", progress, [&] {
      const auto train_data = rc::make_examples(src_parts.train, tgt_parts.train,
                                                src_vocab, tgt_vocab);
      const auto dev_data =
          rc::make_examples(src_parts.dev, tgt_parts.dev, src_vocab, tgt_vocab);
      rc::Model m(config.model, src_vocab.size(), tgt_vocab.size());
      m.initialize(config.model.seed);
      rc::TrainOptions opts;
      if (progress) {
        opts.on_validation = [&](const rc::ValidationRecord& r) {
          char buf[160];
          std::snprintf(buf, sizeof(buf),
                        "step %zu epoch %zu ce %.4f ppl %.3f bleu %.2f", r.step,
                        r.epoch, r.dev.cross_entropy, r.dev.perplexity, r.dev.bleu);
          progress("train", buf);
        };
      }
      rc::TrainResult result = rc::train(std::move(m), train_data, dev_data, opts);
      rc::save_model_dir(out / "model", result.model, src_vocab, tgt_vocab);
      write_file(out / "model" / "train_log.tsv", result.log.to_text());
      manifest.outputs.emplace_back("train", "model");
      manifest.trained = true;
      return std::move(result.model);
    });

    const std::vector<std::string> hyps = stage("decode", progress, [&] {
      std::vector<std::string> lines;
      for (const auto& line : src_parts.test) {
        std::vector<TokenId> src = src_vocab.encode(line);
        if (src.size() > config.model.max_length) {
          src.resize(config.model.max_length);
          src.back() = Vocab::kEos;
        }
        const auto ids = rc::beam_decode(model, src,
                                         config.model.beam_size,
                                         config.model.length_norm_alpha,
                                         config.model.max_length);
        lines.push_back(tgt_vocab.decode(ids));
      }
      write_lines(out / "test.hyp", lines);
      manifest.outputs.emplace_back("decode", "test.hyp");
      return lines;
    });

    stage("score", progress, [&] {
      try {
        const BleuReport report = corpus_bleu_lines(hyps, tgt_parts.test);
        manifest.test_bleu = report.bleu;
        manifest.test_bleu_report = report.to_string();
      } catch (const UndefinedPrecisionError& e) {
        manifest.test_bleu = 0.0;
        manifest.test_bleu_report = e.what();
      }
      return 0;
    });
  }

  stage("manifest", progress, [&] {
    write_file(out / "manifest.json", manifest.to_json());
    return 0;
  });
  return manifest;
}

}  // namespace abugida
