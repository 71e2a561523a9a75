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

// Aggregated multi-run results, multilingual-vs-monolingual gains and their
// TSV / aligned-text rendering. Scores are on the 0-100 scale and printed
// with three decimals, rounded half-up.

#ifndef COREFKIT_REPORT_H_
#define COREFKIT_REPORT_H_

#include <optional>
#include <string>
#include <vector>

namespace corefkit {

struct ResultsRow {
  std::string model;
  std::string language;
  // Evaluated against gold with singletons removed.
  bool filtered = false;
  double mean_f1 = 0.0;
  // Student-t 95% half-width; absent for a single run.
  std::optional<double> halfwidth;
  std::vector<double> runs;

  bool single_run() const { return !halfwidth.has_value(); }
};

// Mean and confidence half-width of per-run scores (at least one).
ResultsRow AggregateRuns(std::string model, std::string language,
                         bool filtered, std::vector<double> runs);

// How a gain is judged larger than the confidence interval.
enum class BoldRule {
  kMaxHalfwidth,  // |gain| > max of the two half-widths
  kMinHalfwidth,
  kSumHalfwidths,
};

struct GainCell {
  std::string model;
  std::string baseline;
  std::string language;
  double gain = 0.0;
  bool bold = false;
};

// gain = multi.mean - mono.mean for every multi row, matched by language and
// evaluation subset. Single-run rows count as half-width 0. Throws
// "missing-pair" when a multi row has no monolingual counterpart.
std::vector<GainCell> GainsTable(const std::vector<ResultsRow> &mono,
                                 const std::vector<ResultsRow> &multi,
                                 BoldRule rule = BoldRule::kMaxHalfwidth);

// Three decimals, half-up: "58.883".
std::string FormatScore(double value);
// Explicit sign for nonzero values: "+6.140", "-0.149", "0.000".
std::string FormatGain(double value);

std::string RowsToTsv(const std::vector<ResultsRow> &rows);
std::string RowsToText(const std::vector<ResultsRow> &rows);
std::string GainsToTsv(const std::vector<GainCell> &gains);
// Bold cells are written as *value*.
std::string GainsToText(const std::vector<GainCell> &gains);

}  // namespace corefkit

#endif  // COREFKIT_REPORT_H_
