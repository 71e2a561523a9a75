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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corefkit/checkpoint.h"
#include "corefkit/config_file.h"
#include "corefkit/conllu.h"
#include "corefkit/corpus_ops.h"
#include "corefkit/error.h"
#include "corefkit/experiment.h"
#include "corefkit/metrics.h"
#include "corefkit/report.h"
#include "corefkit/span_model.h"
#include "corefkit/text.h"
#include "corefkit/trainer.h"

namespace fs = std::filesystem;
using namespace corefkit;

namespace {

void WriteText(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorefError("io-error", "cannot write " + path.string());
  out << text;
}

void Log(const std::string &message) { std::cerr << message << "\n"; }

int Stats(const std::string &path) {
  const CorpusStats s = ComputeStats(ReadConlluFile(path));
  std::cout << "docs\tsents\twords\tempty\tclusters\tmentions\tsingleton_pct\t"
               "discont_pct\n"
            << s.docs << "\t" << s.sents << "\t" << s.words << "\t" << s.empty
            << "\t" << s.clusters << "\t" << s.mentions << "\t"
            << FormatFixed(s.singleton_pct, 3) << "\t"
            << FormatFixed(s.discont_pct, 3) << "\n";
  return 0;
}

int SplitCommand(const std::string &in, const std::string &out_train,
          const std::string &out_dev, double fraction, uint64_t seed) {
  auto [train, dev] = SplitTrainDev(ReadConlluFile(in), fraction, seed);
  WriteConlluFile(out_train, train);
  WriteConlluFile(out_dev, dev);
  std::cout << "train\t" << train.documents.size() << "\tdev\t"
            << dev.documents.size() << "\n";
  return 0;
}

int Filter(const std::string &in, const std::string &out, bool singletons,
           bool discontinuous) {
  Corpus corpus = ReadConlluFile(in);
  if (discontinuous) corpus = DropDiscontinuous(corpus);
  if (singletons) corpus = FilterSingletons(corpus);
  WriteConlluFile(out, corpus);
  return 0;
}

int Score(const std::string &key_path, const std::string &response_path,
          bool filter_singletons) {
  const Corpus key = ReadConlluFile(key_path);
  const Corpus response = ReadConlluFile(response_path);
  const ConllScore score = ScoreCorpus(key, response, filter_singletons);
  auto pct = [](double v) { return FormatFixed(100.0 * v, 3); };
  std::cout << "muc_p\tmuc_r\tmuc_f1\tb3_p\tb3_r\tb3_f1\tceaf_p\tceaf_r\t"
               "ceaf_f1\tconll_f1\n";
  for (const PRF &prf : {score.muc, score.b_cubed, score.ceaf_phi4}) {
    std::cout << pct(prf.precision) << "\t" << pct(prf.recall) << "\t"
              << pct(prf.f1) << "\t";
  }
  std::cout << pct(score.conll_f1) << "\n";
  return 0;
}

int TrainCommand(const std::string &config_path,
                 const std::vector<std::string> &train_paths,
                 const std::string &dev_path, const std::string &out_path) {
  TrainConfig config;
  if (!config_path.empty()) {
    KeyValueConfig kv = KeyValueConfig::Load(config_path);
    config = ReadTrainConfig(kv);
    kv.CheckAllUsed();
  }
  std::vector<Corpus> parts;
  for (const std::string &path : train_paths) {
    parts.push_back(ReadConlluFile(path));
  }
  const Corpus train = parts.size() == 1 ? parts[0] : MergeCorpora(parts);
  std::optional<Corpus> dev;
  if (!dev_path.empty()) dev = ReadConlluFile(dev_path, {"", "", Split::kDev});
  const TrainResult result =
      Train(train, dev ? &*dev : nullptr, config, Log);
  SaveCheckpointFile(out_path, result.params);
  std::cout << "best_step\t" << result.log.best_step << "\n";
  if (dev) {
    std::cout << "best_dev_conll_f1\t"
              << FormatFixed(100.0 * result.log.best_dev_f1, 3) << "\n";
  }
  return 0;
}

int PredictCommand(const std::string &model_path, const std::string &in,
                   const std::string &out) {
  const ModelParams params = LoadCheckpointFile(model_path);
  Corpus corpus = ReadConlluFile(in);
  for (Document &doc : corpus.documents) doc = Predict(doc, params);
  WriteConlluFile(out, corpus);
  return 0;
}

int ExperimentCommand(const std::string &config_path,
                      const std::string &results_dir) {
  const ExperimentConfig config = LoadExperimentConfig(config_path);
  const ExperimentOutput output = RunExperiment(config, results_dir, Log);
  std::cout << "run_dir\t" << output.run_dir << "\n" << RowsToText(output.rows);
  return 0;
}

int ReportCommand(const std::string &results_dir,
                  const std::vector<int> &tables) {
  const ReportTables report = BuildReport(LoadRecords(results_dir));
  for (int table : tables) {
    std::string tsv;
    std::string text;
    std::string title;
    if (table == 2) {
      tsv = RowsToTsv(report.overall);
      text = RowsToText(report.overall);
      title = "Overall CoNLL F1";
    } else if (table == 3) {
      tsv = GainsToTsv(report.gains);
      text = GainsToText(report.gains);
      title = "Gains over monolingual baselines";
    } else if (table == 4) {
      tsv = RowsToTsv(report.filtered);
      text = RowsToText(report.filtered);
      title = "CoNLL F1 without singletons";
    } else {
      throw CorefError("bad-table", "unknown table " + std::to_string(table));
    }
    WriteText(fs::path(results_dir) / ("table" + std::to_string(table) + ".tsv"),
              tsv);
    std::cout << "Table " << table << ": " << title << "\n" << text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"corefkit: span-ranking coreference toolkit"};
  app.require_subcommand(1);

  std::string in, out, out_dev, key, response, config, model, results_dir, dev;
  std::vector<std::string> train_files;
  std::vector<int> tables = {2, 3, 4};
  double fraction = 0.1;
  uint64_t seed = 1;
  bool singletons = false, discontinuous = false, filter_singletons = false;

  auto *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("file", in, "CoNLL-U file")->required();

  auto *split = app.add_subcommand("split", "Seeded train/dev split");
  split->add_option("--dev-fraction", fraction)->capture_default_str();
  split->add_option("--seed", seed)->capture_default_str();
  split->add_option("in", in)->required();
  split->add_option("out-train", out)->required();
  split->add_option("out-dev", out_dev)->required();

  auto *filter = app.add_subcommand("filter", "Remove singletons or discontinuous mentions");
  filter->add_flag("--singletons", singletons);
  filter->add_flag("--discontinuous", discontinuous);
  filter->add_option("in", in)->required();
  filter->add_option("out", out)->required();

  auto *score = app.add_subcommand("score", "Score a response against a key");
  score->add_option("--key", key)->required();
  score->add_option("--response", response)->required();
  score->add_flag("--filter-singletons", filter_singletons);

  auto *train = app.add_subcommand("train", "Train a model");
  train->add_option("--config", config);
  train->add_option("--train", train_files)->required()->delimiter(',');
  train->add_option("--dev", dev);
  train->add_option("--out", out)->required();

  auto *predict = app.add_subcommand("predict", "Predict clusters");
  predict->add_option("--model", model)->required();
  predict->add_option("--in", in)->required();
  predict->add_option("--out", out)->required();

  auto *experiment = app.add_subcommand("experiment", "Run a multi-seed experiment");
  experiment->add_option("--config", config)->required();
  experiment->add_option("--results-dir", results_dir)->required();

  auto *report = app.add_subcommand("report", "Build result tables");
  report->add_option("--results-dir", results_dir)->required();
  report->add_option("--tables", tables)->delimiter(',')->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats) return Stats(in);
    if (*split) return SplitCommand(in, out, out_dev, fraction, seed);
    if (*filter) return Filter(in, out, singletons, discontinuous);
    if (*score) return Score(key, response, filter_singletons);
    if (*train) return TrainCommand(config, train_files, dev, out);
    if (*predict) return PredictCommand(model, in, out);
    if (*experiment) return ExperimentCommand(config, results_dir);
    if (*report) return ReportCommand(results_dir, tables);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
