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
#include <random>

#include "corefkit/confidence.h"
#include "corefkit/error.h"
#include "doctest.h"

using namespace corefkit;

namespace {

ResultsRow Row(const std::string &model, const std::string &language,
               double mean, double halfwidth) {
  ResultsRow row;
  row.model = model;
  row.language = language;
  row.mean_f1 = mean;
  row.halfwidth = halfwidth;
  row.runs = {mean, mean};
  return row;
}

}  // namespace

TEST_CASE("t quantiles match printed tables") {
  CHECK(StudentTQuantile(0.975, 1) == doctest::Approx(12.706204736).epsilon(1e-9));
  CHECK(StudentTQuantile(0.975, 2) == doctest::Approx(4.302652730).epsilon(1e-9));
  CHECK(StudentTQuantile(0.975, 4) == doctest::Approx(2.776445105).epsilon(1e-9));
  CHECK(StudentTQuantile(0.975, 9) == doctest::Approx(2.262157163).epsilon(1e-9));
  CHECK(StudentTQuantile(0.95, 29) == doctest::Approx(1.699127027).epsilon(1e-9));
}

TEST_CASE("confidence interval of 1..5") {
  const std::vector<double> samples = {1, 2, 3, 4, 5};
  const Interval ci = ConfidenceInterval(samples);
  CHECK(ci.mean == 3.0);
  CHECK(std::abs(ci.halfwidth - 2.776445105 * std::sqrt(2.5) / std::sqrt(5.0)) < 1e-8);
  CHECK(std::abs(ci.halfwidth - 1.963) < 1e-3);
}

TEST_CASE("confidence interval edge cases") {
  const std::vector<double> same = {4.5, 4.5, 4.5};
  CHECK(ConfidenceInterval(same).halfwidth == 0.0);
  CHECK(ConfidenceInterval(same).mean == 4.5);
  const std::vector<double> one = {1.0};
  try {
    ConfidenceInterval(one);
    FAIL("expected too-few-samples");
  } catch (const CorefError &e) {
    CHECK(e.code() == "too-few-samples");
  }
}

TEST_CASE("confidence interval invariances") {
  std::mt19937_64 engine(17);
  std::uniform_real_distribution<double> value(30.0, 70.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(2 + trial % 7);
    for (double &x : xs) x = value(engine);
    const Interval base = ConfidenceInterval(xs);
    std::vector<double> shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), engine);
    const Interval perm = ConfidenceInterval(shuffled);
    CHECK(std::abs(perm.mean - base.mean) < 1e-12);
    CHECK(std::abs(perm.halfwidth - base.halfwidth) < 1e-12);
    const double a = trial % 2 ? -2.5 : 0.3;
    std::vector<double> scaled = xs;
    for (double &x : scaled) x *= a;
    const Interval s = ConfidenceInterval(scaled);
    CHECK(std::abs(s.mean - a * base.mean) < 1e-9);
    CHECK(std::abs(s.halfwidth - std::abs(a) * base.halfwidth) < 1e-9);
    CHECK(base.mean >= *std::min_element(xs.begin(), xs.end()));
    CHECK(base.mean <= *std::max_element(xs.begin(), xs.end()));
  }
}

TEST_CASE("gains from published means and half-widths") {
  const std::vector<ResultsRow> mono = {Row("mono", "cs", 58.883, 0.204),
                                        Row("mono", "de", 39.958, 0.775)};
  const std::vector<ResultsRow> joined = {Row("joined", "cs", 58.990, 0.304),
                                          Row("joined", "de", 46.098, 0.641)};
  const auto gains = GainsTable(mono, joined);
  REQUIRE(gains.size() == 2);
  CHECK(FormatGain(gains[0].gain) == "+0.107");
  CHECK_FALSE(gains[0].bold);
  CHECK(FormatGain(gains[1].gain) == "+6.140");
  CHECK(gains[1].bold);
  CHECK(gains[1].baseline == "mono");

  const std::string text = GainsToText(gains);
  CHECK(text.find("*+6.140*") != std::string::npos);
  CHECK(text.find("*+0.107*") == std::string::npos);
  CHECK(GainsToTsv(gains) ==
        "model\tbaseline\tlanguage\tgain\tbold\n"
        "joined\tmono\tcs\t+0.107\tfalse\n"
        "joined\tmono\tde\t+6.140\ttrue\n");
}

TEST_CASE("gain rules and antisymmetry") {
  const std::vector<ResultsRow> a = {Row("a", "x", 50.0, 1.0), Row("a", "y", 40.0, 0.5)};
  const std::vector<ResultsRow> b = {Row("b", "x", 50.0, 1.0), Row("b", "y", 41.2, 1.0)};
  const auto forward = GainsTable(a, b);
  const auto backward = GainsTable(b, a);
  CHECK(forward[0].gain == 0.0);
  CHECK_FALSE(forward[0].bold);
  CHECK(FormatGain(forward[0].gain) == "0.000");
  for (size_t i = 0; i < forward.size(); ++i) {
    CHECK(forward[i].gain == -backward[i].gain);
    CHECK(forward[i].bold == backward[i].bold);
  }
  CHECK(forward[1].bold);
  CHECK(GainsTable(a, b, BoldRule::kMinHalfwidth)[1].bold);
  CHECK_FALSE(GainsTable(a, b, BoldRule::kSumHalfwidths)[1].bold);

  ResultsRow single = Row("b", "x", 50.5, 0.0);
  single.halfwidth.reset();
  single.runs = {50.5};
  CHECK(GainsTable({Row("a", "x", 50.0, 0.4)}, {single})[0].bold);

  try {
    GainsTable(a, {Row("b", "z", 1.0, 0.1)});
    FAIL("expected missing-pair");
  } catch (const CorefError &e) {
    CHECK(e.code() == "missing-pair");
  }
  ResultsRow filtered = Row("b", "x", 1.0, 0.1);
  filtered.filtered = true;
  CHECK_THROWS_AS(GainsTable(a, {filtered}), CorefError);
}

TEST_CASE("score formatting rounds half up") {
  CHECK(FormatScore(58.8834) == "58.883");
  CHECK(FormatScore(58.8835) == "58.884");
  CHECK(FormatScore(0.0) == "0.000");
  CHECK(FormatGain(-0.149) == "-0.149");
  CHECK(FormatGain(-0.0001) == "0.000");
}

TEST_CASE("aggregating runs") {
  const ResultsRow row = AggregateRuns("m", "cs", false, {1, 2, 3, 4, 5});
  CHECK(row.mean_f1 == 3.0);
  REQUIRE(row.halfwidth.has_value());
  CHECK(std::abs(*row.halfwidth - 1.963) < 1e-3);
  CHECK_FALSE(row.single_run());

  const ResultsRow single = AggregateRuns("m", "cs", true, {42.0});
  CHECK(single.single_run());
  CHECK(single.mean_f1 == 42.0);
  CHECK_THROWS_AS(AggregateRuns("m", "cs", false, {}), CorefError);
}

TEST_CASE("row tables") {
  CHECK(RowsToTsv({}) ==
        "model\tlanguage\tevaluation\tmean_f1\thalfwidth\truns\tci_method\tflags\n");
  ResultsRow row = Row("mono", "cs", 58.883, 0.204);
  row.runs = {58.7, 58.9, 59.0};
  const ResultsRow single = AggregateRuns("mono", "de", true, {39.9584});
  const std::string tsv = RowsToTsv({row, single});
  CHECK(tsv.find("mono\tcs\tall\t58.883\t0.204\t3\tstudent-t-95\t-\n") != std::string::npos);
  CHECK(tsv.find("mono\tde\tno-singletons\t39.958\t-\t1\tstudent-t-95\tsingle-run\n") !=
        std::string::npos);
  const std::string text = RowsToText({row, single});
  CHECK(text.find("58.883 ± 0.204") != std::string::npos);
  CHECK(text.find("39.958 (single run)") != std::string::npos);
  CHECK(RowsToText({row, single}) == text);
}
