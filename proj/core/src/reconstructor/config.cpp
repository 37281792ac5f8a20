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

#include "abugida/reconstructor/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <vector>

#include "abugida/error.hpp"
#include "abugida/text_io.hpp"

namespace abugida::reconstructor {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + value + "'");
}

struct Field {
  const char* name;
  std::function<std::string(const ModelConfig&)> get;
  std::function<void(ModelConfig&, const std::string&)> set;
};

#define ABUGIDA_SIZE_FIELD(f)                                               \
  Field{#f, [](const ModelConfig& c) { return std::to_string(c.f); },       \
        [](ModelConfig& c, const std::string& v) {                          \
          c.f = parse_number<std::size_t>(#f, v);                           \
        }}
#define ABUGIDA_U64_FIELD(f)                                                \
  Field{#f, [](const ModelConfig& c) { return std::to_string(c.f); },       \
        [](ModelConfig& c, const std::string& v) {                          \
          c.f = parse_number<std::uint64_t>(#f, v);                         \
        }}
#define ABUGIDA_DOUBLE_FIELD(f)                                             \
  Field{#f, [](const ModelConfig& c) { return format_double(c.f); },        \
        [](ModelConfig& c, const std::string& v) {                          \
          c.f = parse_number<double>(#f, v);                                \
        }}
#define ABUGIDA_BOOL_FIELD(f)                                               \
  Field{#f, [](const ModelConfig& c) { return c.f ? "true" : "false"; },    \
        [](ModelConfig& c, const std::string& v) { c.f = parse_bool(#f, v); }}

const std::vector<Field>& fields() {
  static const std::vector<Field> kFields = {
      ABUGIDA_SIZE_FIELD(enc_depth),
      ABUGIDA_SIZE_FIELD(dec_depth),
      ABUGIDA_SIZE_FIELD(heads),
      ABUGIDA_SIZE_FIELD(model_dim),
      ABUGIDA_SIZE_FIELD(ff_dim),
      ABUGIDA_DOUBLE_FIELD(dropout),
      ABUGIDA_DOUBLE_FIELD(label_smoothing),
      ABUGIDA_DOUBLE_FIELD(base_lr),
      ABUGIDA_SIZE_FIELD(lr_decay_start),
      ABUGIDA_SIZE_FIELD(max_length),
      ABUGIDA_SIZE_FIELD(beam_size),
      ABUGIDA_DOUBLE_FIELD(length_norm_alpha),
      ABUGIDA_SIZE_FIELD(early_stop_patience),
      ABUGIDA_U64_FIELD(seed),
      ABUGIDA_BOOL_FIELD(tied_output),
      ABUGIDA_SIZE_FIELD(batch_tokens),
      ABUGIDA_SIZE_FIELD(valid_every),
      ABUGIDA_SIZE_FIELD(max_epochs),
      ABUGIDA_SIZE_FIELD(max_steps),
      ABUGIDA_DOUBLE_FIELD(clip_norm),
      ABUGIDA_DOUBLE_FIELD(adam_beta1),
      ABUGIDA_DOUBLE_FIELD(adam_beta2),
      ABUGIDA_DOUBLE_FIELD(adam_eps),
      ABUGIDA_BOOL_FIELD(exp_smoothing),
      ABUGIDA_DOUBLE_FIELD(exp_smoothing_decay),
  };
  return kFields;
}

#undef ABUGIDA_SIZE_FIELD
#undef ABUGIDA_U64_FIELD
#undef ABUGIDA_DOUBLE_FIELD
#undef ABUGIDA_BOOL_FIELD

}  // namespace

void ModelConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (enc_depth == 0 || dec_depth == 0) fail("depths must be positive");
  if (heads == 0 || model_dim == 0) fail("heads and model_dim must be positive");
  if (model_dim % heads != 0) {
    fail("heads (" + std::to_string(heads) + ") must divide model_dim (" +
         std::to_string(model_dim) + ")");
  }
  if (ff_dim == 0) fail("ff_dim must be positive");
  auto rate = [&](double v, const char* name) {
    if (!(v >= 0.0 && v < 1.0)) fail(std::string(name) + " must lie in [0, 1)");
  };
  rate(dropout, "dropout");
  rate(label_smoothing, "label_smoothing");
  rate(base_lr, "base_lr");
  rate(adam_beta1, "adam_beta1");
  rate(adam_beta2, "adam_beta2");
  rate(exp_smoothing_decay, "exp_smoothing_decay");
  if (max_length < 2) fail("max_length must be >= 2");
  if (beam_size == 0) fail("beam_size must be >= 1");
  if (batch_tokens == 0) fail("batch_tokens must be positive");
  if (!(clip_norm >= 0.0)) fail("clip_norm must be >= 0");
  if (!(adam_eps > 0.0)) fail("adam_eps must be positive");
}

std::string ModelConfig::to_text() const {
  std::string out;
  for (const auto& f : fields()) {
    out += f.name;
    out += " = ";
    out += f.get(*this);
    out += '\n';
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out[std::move(key)] = std::move(value);
  }
  return out;
}

ModelConfig ModelConfig::parse(std::string_view text) {
  ModelConfig cfg;
  for (const auto& [key, value] : parse_key_values(text)) {
    bool found = false;
    for (const auto& f : fields()) {
      if (key == f.name) {
        f.set(cfg, value);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown config key '" + key + "'");
  }
  return cfg;
}

ModelConfig ModelConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

void ModelConfig::save(const std::filesystem::path& path) const {
  write_file(path, to_text());
}

}  // namespace abugida::reconstructor
