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

#include "corefkit/assignment.h"

#include <set>

#include "corefkit/random.h"
#include "doctest.h"
#include "oracles.h"

using namespace corefkit;

TEST_CASE("empty matrices give an empty assignment") {
  const Assignment a = OptimalAssignment({});
  CHECK(a.pairs.empty());
  CHECK(a.total == 0.0);
}

TEST_CASE("prefers the larger total over the greedy choice") {
  const Assignment a = OptimalAssignment({{0.9, 0.8}, {0.7, 0.0}});
  CHECK(a.total == doctest::Approx(1.5));
  REQUIRE(a.pairs.size() == 2);
  CHECK(a.pairs[0] == std::pair<int, int>{0, 1});
  CHECK(a.pairs[1] == std::pair<int, int>{1, 0});
}

TEST_CASE("rectangular matrices in both orientations") {
  CHECK(OptimalAssignment({{0.1, 0.5, 0.2}}).total == doctest::Approx(0.5));
  CHECK(OptimalAssignment({{0.1}, {0.5}, {0.2}}).total == doctest::Approx(0.5));
}

TEST_CASE("matches exhaustive search on random matrices") {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = static_cast<int>(rng.Index(7));
    const int cols = static_cast<int>(rng.Index(7));
    std::vector<std::vector<double>> sim(rows, std::vector<double>(cols));
    for (auto &row : sim) {
      for (double &v : row) v = rng.Unit() < 0.3 ? 0.0 : rng.Unit();
    }
    const Assignment a = OptimalAssignment(sim);
    CHECK(a.total == doctest::Approx(oracle::BestAssignment(sim)).epsilon(1e-12));
    std::set<int> used_rows, used_cols;
    double total = 0.0;
    for (auto [r, c] : a.pairs) {
      CHECK(used_rows.insert(r).second);
      CHECK(used_cols.insert(c).second);
      total += sim[r][c];
    }
    CHECK(total == doctest::Approx(a.total).epsilon(1e-12));
  }
}
