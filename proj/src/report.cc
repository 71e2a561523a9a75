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

#include "corefkit/report.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "corefkit/confidence.h"
#include "corefkit/error.h"
#include "corefkit/text.h"

namespace corefkit {

namespace {

constexpr std::string_view kCiMethod = "student-t-95";

std::string Subset(bool filtered) { return filtered ? "no-singletons" : "all"; }

// Left-aligned columns separated by two spaces.
std::string AlignColumns(const std::vector<std::vector<std::string>> &table) {
  std::vector<size_t> widths;
  auto display_width = [](const std::string &s) {
    // Width in code points.
    return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  };
  for (const auto &row : table) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  }
  std::string out;
  for (const auto &row : table) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(widths[i] - display_width(row[i]) + 2, ' ');
      }
    }
    out += line + "\n";
  }
  return out;
}

std::string JoinTsv(const std::vector<std::string> &fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += '\t';
    line += fields[i];
  }
  return line + "\n";
}

}  // namespace

ResultsRow AggregateRuns(std::string model, std::string language,
                         bool filtered, std::vector<double> runs) {
  if (runs.empty()) throw CorefError("too-few-samples", "no runs");
  ResultsRow row;
  row.model = std::move(model);
  row.language = std::move(language);
  row.filtered = filtered;
  if (runs.size() >= 2) {
    const Interval ci = ConfidenceInterval(runs);
    row.mean_f1 = ci.mean;
    row.halfwidth = ci.halfwidth;
  } else {
    row.mean_f1 = runs.front();
  }
  row.runs = std::move(runs);
  return row;
}

std::vector<GainCell> GainsTable(const std::vector<ResultsRow> &mono,
                                 const std::vector<ResultsRow> &multi,
                                 BoldRule rule) {
  std::vector<GainCell> cells;
  for (const ResultsRow &row : multi) {
    auto base = std::find_if(mono.begin(), mono.end(), [&](const ResultsRow &m) {
      return m.language == row.language && m.filtered == row.filtered;
    });
    if (base == mono.end()) {
      throw CorefError("missing-pair",
                       row.model + " has no monolingual result for " +
                           row.language);
    }
    const double a = base->halfwidth.value_or(0.0);
    const double b = row.halfwidth.value_or(0.0);
    double threshold = std::max(a, b);
    if (rule == BoldRule::kMinHalfwidth) threshold = std::min(a, b);
    if (rule == BoldRule::kSumHalfwidths) threshold = a + b;
    GainCell cell;
    cell.model = row.model;
    cell.baseline = base->model;
    cell.language = row.language;
    cell.gain = row.mean_f1 - base->mean_f1;
    cell.bold = std::abs(cell.gain) > threshold;
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string FormatScore(double value) { return FormatFixed(value, 3); }

std::string FormatGain(double value) {
  std::string text = FormatFixed(value, 3);
  if (text.front() != '-' && text.find_first_not_of("0.") != std::string::npos) {
    text.insert(text.begin(), '+');
  }
  return text;
}

std::string RowsToTsv(const std::vector<ResultsRow> &rows) {
  std::string out = JoinTsv({"model", "language", "evaluation", "mean_f1",
                             "halfwidth", "runs", "ci_method", "flags"});
  for (const ResultsRow &row : rows) {
    out += JoinTsv({row.model, row.language, Subset(row.filtered),
                    FormatScore(row.mean_f1),
                    row.halfwidth ? FormatScore(*row.halfwidth) : "-",
                    std::to_string(row.runs.size()), std::string(kCiMethod),
                    row.single_run() ? "single-run" : "-"});
  }
  return out;
}

std::string RowsToText(const std::vector<ResultsRow> &rows) {
  std::vector<std::vector<std::string>> table = {
      {"model", "language", "evaluation", "F1", "runs"}};
  for (const ResultsRow &row : rows) {
    std::string f1 = FormatScore(row.mean_f1);
    f1 += row.halfwidth ? " ± " + FormatScore(*row.halfwidth) : " (single run)";
    table.push_back({row.model, row.language, Subset(row.filtered), f1,
                     std::to_string(row.runs.size())});
  }
  return AlignColumns(table);
}

std::string GainsToTsv(const std::vector<GainCell> &gains) {
  std::string out =
      JoinTsv({"model", "baseline", "language", "gain", "bold"});
  for (const GainCell &cell : gains) {
    out += JoinTsv({cell.model, cell.baseline, cell.language,
                    FormatGain(cell.gain), cell.bold ? "true" : "false"});
  }
  return out;
}

std::string GainsToText(const std::vector<GainCell> &gains) {
  std::vector<std::vector<std::string>> table = {
      {"model", "baseline", "language", "gain"}};
  for (const GainCell &cell : gains) {
    const std::string gain = FormatGain(cell.gain);
    table.push_back({cell.model, cell.baseline, cell.language,
                     cell.bold ? "*" + gain + "*" : gain});
  }
  return AlignColumns(table);
}

}  // namespace corefkit
