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

// Monolingual and joined multilingual experiments over several seeds.
//
// Each language contributes a training file and a test file. Without an
// explicit dev file the dev set is a seeded 10% document split of the
// training file. A monolingual model is trained per (seed, language); a joined
// model is trained once per seed on the concatenation of all training
// corpora. Every run is scored per evaluation language, optionally also
// against gold with singletons removed, and aggregated into mean +- Student-t
// 95% half-width.
//
// Results live in <results-dir>/<model>-<config hash>/: config.txt,
// runs.jsonl (one JSON object per run and language) and one checkpoint per
// run. Finished runs found in runs.jsonl are not repeated.

#ifndef COREFKIT_EXPERIMENT_H_
#define COREFKIT_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corefkit/config_file.h"
#include "corefkit/report.h"
#include "corefkit/trainer.h"

namespace corefkit {

enum class TrainingMode { kMonolingual, kJoined };

struct LanguageCorpora {
  std::string language;
  std::string train_path;
  std::string test_path;
  // Optional; empty means split the training file.
  std::string dev_path;
};

struct ExperimentConfig {
  std::string model_name;
  TrainingMode mode = TrainingMode::kMonolingual;
  // Model whose rows this one is compared against in the gains table.
  std::string baseline;
  std::vector<LanguageCorpora> languages;
  std::vector<std::string> eval_languages;
  int runs = 5;
  std::vector<uint64_t> seeds;
  TrainConfig train;
  bool filter_singletons_on_test = true;
  double dev_fraction = 0.1;
  // Runs executed concurrently.
  int jobs = 1;

  // Throws "bad-config".
  void Check() const;
  // Stable text of every setting that affects results (seeds sorted).
  std::string CanonicalText() const;
  // 16 hex digits of a hash of CanonicalText().
  std::string Hash() const;
};

// Keys: model, mode (mono|joined), baseline, languages, train.<lang>,
// test.<lang>, dev.<lang>, eval_languages, runs, seeds,
// filter_singletons_on_test, dev_fraction, jobs, plus the training keys of
// ReadTrainConfig. Relative paths are resolved against base_dir. Unknown keys
// are rejected.
ExperimentConfig ReadExperimentConfig(const KeyValueConfig &config,
                                      const std::string &base_dir);
ExperimentConfig LoadExperimentConfig(const std::string &path);

struct RunRecord {
  std::string model;
  std::string baseline;
  std::string language;
  uint64_t seed = 0;
  bool filtered = false;
  // Scores on the 0-100 scale.
  double conll_f1 = 0.0;
  double muc_f1 = 0.0;
  double b_cubed_f1 = 0.0;
  double ceaf_phi4_f1 = 0.0;
  int best_step = 0;
  // Training unit that produced the record ("seed" or "seed/language").
  std::string unit;
};

std::string RunRecordToJson(const RunRecord &record);
// Throws "bad-record".
RunRecord RunRecordFromJson(const std::string &line);

// Every runs.jsonl below results_dir, sorted by (model, language, filtered,
// seed).
std::vector<RunRecord> LoadRecords(const std::string &results_dir);

// One row per (model, language, filtered), runs ordered by seed.
std::vector<ResultsRow> AggregateRecords(const std::vector<RunRecord> &records);

struct ExperimentOutput {
  std::string run_dir;
  std::vector<RunRecord> records;
  std::vector<ResultsRow> rows;
};

ExperimentOutput RunExperiment(const ExperimentConfig &config,
                               const std::string &results_dir,
                               const ProgressFn &progress = {});

struct ReportTables {
  std::vector<ResultsRow> overall;
  std::vector<GainCell> gains;
  std::vector<ResultsRow> filtered;
};

// Overall results, gains of every model with a baseline over that baseline
// (unfiltered), and results after singleton removal.
ReportTables BuildReport(const std::vector<RunRecord> &records);

}  // namespace corefkit

#endif  // COREFKIT_EXPERIMENT_H_
