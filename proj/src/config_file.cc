// Copyright 2026 The corefkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corefkit/config_file.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "corefkit/error.h"
#include "corefkit/text.h"

namespace corefkit {

namespace {

template <typename T>
T ParseNumber(const std::string &key, const std::string &text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CorefError("bad-config", key + ": cannot parse '" + text + "'");
  }
  return value;
}

}  // namespace

KeyValueConfig KeyValueConfig::Parse(std::string_view text) {
  KeyValueConfig config;
  int line_number = 0;
  for (const std::string &raw : SplitString(text, '\n')) {
    ++line_number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw CorefError("bad-config", "expected key = value", line_number);
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw CorefError("bad-config", "empty key", line_number);
    }
    if (!config.values_.emplace(key, value).second) {
      throw CorefError("bad-config", "repeated key " + key, line_number);
    }
  }
  return config;
}

KeyValueConfig KeyValueConfig::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CorefError("io-error", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const std::string *KeyValueConfig::Find(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return nullptr;
  used_.insert(key);
  return &it->second;
}

bool KeyValueConfig::Has(const std::string &key) const {
  return values_.count(key) > 0;
}

std::string KeyValueConfig::GetString(const std::string &key,
                                      const std::string &fallback) const {
  const std::string *value = Find(key);
  return value ? *value : fallback;
}

std::string KeyValueConfig::RequireString(const std::string &key) const {
  const std::string *value = Find(key);
  if (!value) throw CorefError("bad-config", "missing key " + key);
  return *value;
}

int KeyValueConfig::GetInt(const std::string &key, int fallback) const {
  const std::string *value = Find(key);
  return value ? ParseNumber<int>(key, *value) : fallback;
}

uint64_t KeyValueConfig::GetUint(const std::string &key,
                                 uint64_t fallback) const {
  const std::string *value = Find(key);
  return value ? ParseNumber<uint64_t>(key, *value) : fallback;
}

double KeyValueConfig::GetDouble(const std::string &key,
                                 double fallback) const {
  const std::string *value = Find(key);
  return value ? ParseNumber<double>(key, *value) : fallback;
}

bool KeyValueConfig::GetBool(const std::string &key, bool fallback) const {
  const std::string *value = Find(key);
  if (!value) return fallback;
  if (*value == "true" || *value == "1" || *value == "yes") return true;
  if (*value == "false" || *value == "0" || *value == "no") return false;
  throw CorefError("bad-config", key + ": expected true or false");
}

std::vector<std::string> KeyValueConfig::GetList(const std::string &key) const {
  std::vector<std::string> items;
  const std::string *value = Find(key);
  if (!value || value->empty()) return items;
  for (const std::string &item : SplitString(*value, ',')) {
    const std::string_view trimmed = Trim(item);
    if (!trimmed.empty()) items.emplace_back(trimmed);
  }
  return items;
}

void KeyValueConfig::CheckAllUsed() const {
  for (const auto &[key, value] : values_) {
    if (!used_.count(key)) throw CorefError("unknown-key", key);
  }
}

TrainConfig ReadTrainConfig(const KeyValueConfig &config,
                            TrainConfig defaults) {
  TrainConfig out = defaults;
  ModelConfig &m = out.model;
  m.vocab_buckets = config.GetInt("vocab_buckets", m.vocab_buckets);
  m.embed_dim = config.GetInt("embed_dim", m.embed_dim);
  m.hidden_dim = config.GetInt("hidden_dim", m.hidden_dim);
  m.width_dim = config.GetInt("width_dim", m.width_dim);
  m.distance_dim = config.GetInt("distance_dim", m.distance_dim);
  m.max_span_width = config.GetInt("max_span_width", m.max_span_width);
  m.prune_ratio = config.GetDouble("prune_ratio", m.prune_ratio);
  m.max_antecedents = config.GetInt("max_antecedents", m.max_antecedents);
  m.lr_encoder = config.GetDouble("lr_encoder", m.lr_encoder);
  m.lr_task = config.GetDouble("lr_task", m.lr_task);
  m.hash_seed = config.GetUint("hash_seed", m.hash_seed);
  out.steps = config.GetInt("steps", out.steps);
  out.eval_every = config.GetInt("eval_every", out.eval_every);
  out.seed = config.GetUint("seed", out.seed);
  out.dev_filter_singletons =
      config.GetBool("dev_filter_singletons", out.dev_filter_singletons);
  m.Check();
  if (out.steps < 0) throw CorefError("bad-config", "steps must be >= 0");
  return out;
}

}  // namespace corefkit
