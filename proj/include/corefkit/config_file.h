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

// Flat "key = value" configuration files. Blank lines and lines starting with
// '#' are ignored. Keys are read through typed getters; CheckAllUsed()
// rejects keys nobody asked for.

#ifndef COREFKIT_CONFIG_FILE_H_
#define COREFKIT_CONFIG_FILE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corefkit/trainer.h"

namespace corefkit {

class KeyValueConfig {
 public:
  // Throws "bad-config" for lines without '=' or repeated keys.
  static KeyValueConfig Parse(std::string_view text);
  static KeyValueConfig Load(const std::string &path);

  bool Has(const std::string &key) const;
  std::string GetString(const std::string &key,
                        const std::string &fallback) const;
  // Throws "bad-config" when missing.
  std::string RequireString(const std::string &key) const;
  int GetInt(const std::string &key, int fallback) const;
  uint64_t GetUint(const std::string &key, uint64_t fallback) const;
  double GetDouble(const std::string &key, double fallback) const;
  bool GetBool(const std::string &key, bool fallback) const;
  // Comma-separated list with surrounding spaces trimmed; empty if missing.
  std::vector<std::string> GetList(const std::string &key) const;

  // Throws "unknown-key" naming the first key never read.
  void CheckAllUsed() const;

  const std::map<std::string, std::string> &entries() const { return values_; }

 private:
  const std::string *Find(const std::string &key) const;

  std::map<std::string, std::string> values_;
  mutable std::set<std::string> used_;
};

// Reads model and training keys (vocab_buckets, embed_dim, hidden_dim,
// width_dim, distance_dim, max_span_width, prune_ratio, max_antecedents,
// lr_encoder, lr_task, hash_seed, steps, eval_every, seed,
// dev_filter_singletons) on top of defaults.
TrainConfig ReadTrainConfig(const KeyValueConfig &config,
                            TrainConfig defaults = {});

}  // namespace corefkit

#endif  // COREFKIT_CONFIG_FILE_H_
