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

#include "corefkit/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "corefkit/checkpoint.h"
#include "corefkit/conllu.h"
#include "corefkit/corpus_ops.h"
#include "corefkit/error.h"
#include "corefkit/metrics.h"
#include "corefkit/span_model.h"
#include "corefkit/text.h"
#include "json.hpp"

namespace corefkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Shortest(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string ResolvePath(const std::string &base_dir, const std::string &path) {
  if (path.empty() || fs::path(path).is_absolute() || base_dir.empty()) {
    return path;
  }
  return (fs::path(base_dir) / path).lexically_normal().string();
}

// A training run: one seed, and for monolingual models one language.
struct RunUnit {
  uint64_t seed = 0;
  std::vector<std::string> train_languages;
  std::vector<std::string> eval_languages;
  std::string name;
};

struct LoadedLanguage {
  Corpus train;
  Corpus test;
  std::optional<Corpus> dev;
};

bool Contains(const std::vector<std::string> &items, const std::string &x) {
  return std::find(items.begin(), items.end(), x) != items.end();
}

std::vector<RunRecord> ReadRecordFile(const fs::path &path) {
  std::vector<RunRecord> records;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    records.push_back(RunRecordFromJson(line));
  }
  return records;
}

void SortRecords(std::vector<RunRecord> *records) {
  std::stable_sort(records->begin(), records->end(),
                   [](const RunRecord &a, const RunRecord &b) {
                     return std::tie(a.model, a.language, a.filtered, a.seed) <
                            std::tie(b.model, b.language, b.filtered, b.seed);
                   });
}

}  // namespace

void ExperimentConfig::Check() const {
  auto require = [](bool ok, const std::string &what) {
    if (!ok) throw CorefError("bad-config", what);
  };
  require(!model_name.empty(), "model name is empty");
  require(model_name.find_first_of("/\\ \t") == std::string::npos,
          "model name must not contain '/', '\\\\' or spaces");
  require(!languages.empty(), "no languages");
  std::set<std::string> seen;
  for (const LanguageCorpora &lang : languages) {
    require(!lang.language.empty(), "empty language code");
    require(seen.insert(lang.language).second,
            "language listed twice: " + lang.language);
    require(!lang.train_path.empty(), "no training file for " + lang.language);
    require(!lang.test_path.empty(), "no test file for " + lang.language);
  }
  require(!eval_languages.empty(), "no evaluation languages");
  for (const std::string &lang : eval_languages) {
    require(seen.count(lang) > 0, "evaluation language without corpora: " + lang);
  }
  require(runs >= 1, "runs must be >= 1");
  require(static_cast<int>(seeds.size()) == runs,
          "need exactly one seed per run");
  require(std::set<uint64_t>(seeds.begin(), seeds.end()).size() == seeds.size(),
          "seeds must be distinct");
  require(dev_fraction > 0.0 && dev_fraction < 1.0,
          "dev_fraction must lie in (0, 1)");
  require(jobs >= 1, "jobs must be >= 1");
  require(baseline != model_name, "a model cannot be its own baseline");
  train.model.Check();
}

std::string ExperimentConfig::CanonicalText() const {
  std::ostringstream out;
  out << "model=" << model_name << "\n";
  out << "mode=" << (mode == TrainingMode::kJoined ? "joined" : "mono") << "\n";
  out << "baseline=" << baseline << "\n";
  for (const LanguageCorpora &lang : languages) {
    out << "language=" << lang.language << " train=" << lang.train_path
        << " test=" << lang.test_path << " dev=" << lang.dev_path << "\n";
  }
  out << "eval_languages=";
  for (const std::string &lang : eval_languages) out << lang << ",";
  std::vector<uint64_t> sorted = seeds;
  std::sort(sorted.begin(), sorted.end());
  out << "\nseeds=";
  for (uint64_t seed : sorted) out << seed << ",";
  out << "\nfilter_singletons_on_test=" << filter_singletons_on_test << "\n";
  out << "dev_fraction=" << Shortest(dev_fraction) << "\n";
  const ModelConfig &m = train.model;
  out << "vocab_buckets=" << m.vocab_buckets << "\nembed_dim=" << m.embed_dim
      << "\nhidden_dim=" << m.hidden_dim << "\nwidth_dim=" << m.width_dim
      << "\ndistance_dim=" << m.distance_dim
      << "\nmax_span_width=" << m.max_span_width
      << "\nprune_ratio=" << Shortest(m.prune_ratio)
      << "\nmax_antecedents=" << m.max_antecedents
      << "\nlr_encoder=" << Shortest(m.lr_encoder)
      << "\nlr_task=" << Shortest(m.lr_task) << "\nhash_seed=" << m.hash_seed
      << "\nsteps=" << train.steps << "\neval_every=" << train.eval_every
      << "\ndev_filter_singletons=" << train.dev_filter_singletons << "\n";
  return out.str();
}

std::string ExperimentConfig::Hash() const {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(HashString(CanonicalText(), 0)));
  return buffer;
}

ExperimentConfig ReadExperimentConfig(const KeyValueConfig &config,
                                      const std::string &base_dir) {
  ExperimentConfig out;
  out.model_name = config.RequireString("model");
  const std::string mode = config.GetString("mode", "mono");
  if (mode == "mono") {
    out.mode = TrainingMode::kMonolingual;
  } else if (mode == "joined") {
    out.mode = TrainingMode::kJoined;
  } else {
    throw CorefError("bad-config", "mode must be mono or joined");
  }
  out.baseline = config.GetString("baseline", "");
  for (const std::string &lang : config.GetList("languages")) {
    LanguageCorpora corpora;
    corpora.language = lang;
    corpora.train_path =
        ResolvePath(base_dir, config.RequireString("train." + lang));
    corpora.test_path =
        ResolvePath(base_dir, config.RequireString("test." + lang));
    corpora.dev_path =
        ResolvePath(base_dir, config.GetString("dev." + lang, ""));
    out.languages.push_back(std::move(corpora));
  }
  out.eval_languages = config.GetList("eval_languages");
  if (out.eval_languages.empty()) {
    for (const LanguageCorpora &lang : out.languages) {
      out.eval_languages.push_back(lang.language);
    }
  }
  out.runs = config.GetInt("runs", 5);
  for (const std::string &seed : config.GetList("seeds")) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), value);
    if (ec != std::errc() || ptr != seed.data() + seed.size()) {
      throw CorefError("bad-config", "bad seed '" + seed + "'");
    }
    out.seeds.push_back(value);
  }
  if (out.seeds.empty()) {
    for (int i = 1; i <= out.runs; ++i) out.seeds.push_back(i);
  }
  out.filter_singletons_on_test =
      config.GetBool("filter_singletons_on_test", true);
  out.dev_fraction = config.GetDouble("dev_fraction", 0.1);
  out.jobs = config.GetInt("jobs", 1);
  out.train = ReadTrainConfig(config);
  config.CheckAllUsed();
  out.Check();
  return out;
}

ExperimentConfig LoadExperimentConfig(const std::string &path) {
  return ReadExperimentConfig(KeyValueConfig::Load(path),
                              fs::path(path).parent_path().string());
}

std::string RunRecordToJson(const RunRecord &record) {
  json j;
  j["model"] = record.model;
  j["baseline"] = record.baseline;
  j["language"] = record.language;
  j["seed"] = record.seed;
  j["filtered"] = record.filtered;
  j["conll_f1"] = record.conll_f1;
  j["muc_f1"] = record.muc_f1;
  j["b_cubed_f1"] = record.b_cubed_f1;
  j["ceaf_phi4_f1"] = record.ceaf_phi4_f1;
  j["best_step"] = record.best_step;
  j["unit"] = record.unit;
  return j.dump();
}

RunRecord RunRecordFromJson(const std::string &line) {
  try {
    const json j = json::parse(line);
    RunRecord record;
    record.model = j.at("model").get<std::string>();
    record.baseline = j.value("baseline", std::string());
    record.language = j.at("language").get<std::string>();
    record.seed = j.at("seed").get<uint64_t>();
    record.filtered = j.at("filtered").get<bool>();
    record.conll_f1 = j.at("conll_f1").get<double>();
    record.muc_f1 = j.value("muc_f1", 0.0);
    record.b_cubed_f1 = j.value("b_cubed_f1", 0.0);
    record.ceaf_phi4_f1 = j.value("ceaf_phi4_f1", 0.0);
    record.best_step = j.value("best_step", 0);
    record.unit = j.value("unit", std::string());
    return record;
  } catch (const json::exception &e) {
    throw CorefError("bad-record", e.what());
  }
}

std::vector<RunRecord> LoadRecords(const std::string &results_dir) {
  std::vector<RunRecord> records;
  if (!fs::exists(results_dir)) return records;
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(results_dir)) {
    if (entry.is_regular_file() && entry.path().filename() == "runs.jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path &file : files) {
    for (RunRecord &record : ReadRecordFile(file)) {
      records.push_back(std::move(record));
    }
  }
  SortRecords(&records);
  return records;
}

std::vector<ResultsRow> AggregateRecords(const std::vector<RunRecord> &records) {
  std::map<std::tuple<std::string, bool, std::string>,
           std::vector<std::pair<uint64_t, double>>>
      groups;
  for (const RunRecord &record : records) {
    groups[{record.model, record.filtered, record.language}].emplace_back(
        record.seed, record.conll_f1);
  }
  std::vector<ResultsRow> rows;
  for (auto &[key, runs] : groups) {
    std::sort(runs.begin(), runs.end());
    std::vector<double> scores;
    for (const auto &[seed, score] : runs) scores.push_back(score);
    rows.push_back(AggregateRuns(std::get<0>(key), std::get<2>(key),
                                 std::get<1>(key), std::move(scores)));
  }
  return rows;
}

ExperimentOutput RunExperiment(const ExperimentConfig &config,
                               const std::string &results_dir,
                               const ProgressFn &progress) {
  config.Check();
  ExperimentOutput output;
  const fs::path run_dir =
      fs::path(results_dir) / (config.model_name + "-" + config.Hash());
  output.run_dir = run_dir.string();
  fs::create_directories(run_dir);
  {
    std::ofstream out(run_dir / "config.txt");
    out << config.CanonicalText();
  }
  const fs::path records_path = run_dir / "runs.jsonl";
  std::vector<RunRecord> records;
  if (fs::exists(records_path)) records = ReadRecordFile(records_path);
  std::set<std::string> done;
  for (const RunRecord &record : records) done.insert(record.unit);

  std::map<std::string, LoadedLanguage> data;
  for (const LanguageCorpora &lang : config.languages) {
    LoadedLanguage loaded;
    loaded.train = ReadConlluFile(lang.train_path,
                                  {lang.language, lang.language, Split::kTrain});
    loaded.test = ReadConlluFile(lang.test_path,
                                 {lang.language, lang.language, Split::kTest});
    if (!lang.dev_path.empty()) {
      loaded.dev = ReadConlluFile(lang.dev_path,
                                  {lang.language, lang.language, Split::kDev});
    }
    data.emplace(lang.language, std::move(loaded));
  }

  std::vector<RunUnit> units;
  for (uint64_t seed : config.seeds) {
    if (config.mode == TrainingMode::kJoined) {
      RunUnit unit{seed, {}, config.eval_languages, std::to_string(seed)};
      for (const LanguageCorpora &lang : config.languages) {
        unit.train_languages.push_back(lang.language);
      }
      units.push_back(std::move(unit));
    } else {
      for (const LanguageCorpora &lang : config.languages) {
        if (!Contains(config.eval_languages, lang.language)) continue;
        units.push_back({seed,
                         {lang.language},
                         {lang.language},
                         std::to_string(seed) + "/" + lang.language});
      }
    }
  }
  std::erase_if(units, [&done](const RunUnit &u) { return done.count(u.name); });

  std::mutex mutex;
  auto run_unit = [&](const RunUnit &unit) {
    std::vector<Corpus> train_parts;
    std::vector<Corpus> dev_parts;
    for (const std::string &lang : unit.train_languages) {
      const LoadedLanguage &loaded = data.at(lang);
      if (loaded.dev) {
        train_parts.push_back(loaded.train);
        dev_parts.push_back(*loaded.dev);
      } else {
        auto [train, dev] =
            SplitTrainDev(loaded.train, config.dev_fraction, unit.seed);
        train_parts.push_back(std::move(train));
        dev_parts.push_back(std::move(dev));
      }
    }
    const Corpus train = MergeCorpora(train_parts);
    const Corpus dev = MergeCorpora(dev_parts);
    TrainConfig train_config = config.train;
    train_config.seed = unit.seed;
    const TrainResult result = Train(train, &dev, train_config);

    std::string checkpoint = "run-" + unit.name + ".ckpt";
    std::replace(checkpoint.begin(), checkpoint.end(), '/', '-');
    SaveCheckpointFile((run_dir / checkpoint).string(), result.params);

    std::vector<RunRecord> unit_records;
    for (const std::string &lang : unit.eval_languages) {
      const Corpus &test = data.at(lang).test;
      Corpus predicted{test.name, test.language, {}, test.split};
      for (const Document &doc : test.documents) {
        predicted.documents.push_back(Predict(doc, result.params));
      }
      std::vector<bool> variants = {false};
      if (config.filter_singletons_on_test) variants.push_back(true);
      for (bool filtered : variants) {
        const ConllScore score = ScoreCorpus(test, predicted, filtered);
        RunRecord record;
        record.model = config.model_name;
        record.baseline = config.baseline;
        record.language = lang;
        record.seed = unit.seed;
        record.filtered = filtered;
        record.conll_f1 = 100.0 * score.conll_f1;
        record.muc_f1 = 100.0 * score.muc.f1;
        record.b_cubed_f1 = 100.0 * score.b_cubed.f1;
        record.ceaf_phi4_f1 = 100.0 * score.ceaf_phi4.f1;
        record.best_step = result.log.best_step;
        record.unit = unit.name;
        unit_records.push_back(std::move(record));
      }
    }

    std::lock_guard<std::mutex> lock(mutex);
    std::string lines;
    for (const RunRecord &record : unit_records) {
      lines += RunRecordToJson(record) + "\n";
    }
    std::ofstream out(records_path, std::ios::app);
    out << lines;
    out.flush();
    for (RunRecord &record : unit_records) records.push_back(std::move(record));
    if (progress) {
      progress(config.model_name + " run " + unit.name + " done (best step " +
               std::to_string(result.log.best_step) + ")");
    }
  };

  if (config.jobs <= 1 || units.size() <= 1) {
    for (const RunUnit &unit : units) run_unit(unit);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::vector<std::thread> workers;
    const size_t count =
        std::min(units.size(), static_cast<size_t>(config.jobs));
    for (size_t w = 0; w < count; ++w) {
      workers.emplace_back([&]() {
        for (size_t i = next++; i < units.size(); i = next++) {
          try {
            run_unit(units[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread &worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
  }

  SortRecords(&records);
  output.rows = AggregateRecords(records);
  output.records = std::move(records);
  return output;
}

ReportTables BuildReport(const std::vector<RunRecord> &records) {
  ReportTables tables;
  std::map<std::string, std::string> baselines;
  for (const RunRecord &record : records) {
    if (!record.baseline.empty()) baselines[record.model] = record.baseline;
  }
  const std::vector<ResultsRow> rows = AggregateRecords(records);
  std::map<std::string, std::vector<ResultsRow>> overall_by_model;
  for (const ResultsRow &row : rows) {
    (row.filtered ? tables.filtered : tables.overall).push_back(row);
    if (!row.filtered) overall_by_model[row.model].push_back(row);
  }
  for (const auto &[model, baseline] : baselines) {
    auto base = overall_by_model.find(baseline);
    auto multi = overall_by_model.find(model);
    if (base == overall_by_model.end() || multi == overall_by_model.end()) {
      continue;
    }
    for (GainCell &cell : GainsTable(base->second, multi->second)) {
      tables.gains.push_back(std::move(cell));
    }
  }
  return tables;
}

}  // namespace corefkit
