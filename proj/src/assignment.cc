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

#include <algorithm>
#include <limits>

namespace corefkit {

Assignment OptimalAssignment(
    const std::vector<std::vector<double>> &similarity) {
  Assignment result;
  const int rows = static_cast<int>(similarity.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(similarity[0].size());
  if (rows == 0 || cols == 0) return result;

  // Square problem of size n minimizing cost = -max(sim, 0); padding rows and
  // columns cost 0, which is what leaving an item unmatched is worth.
  const int n = std::max(rows, cols);
  auto cost = [&](int i, int j) {
    if (i >= rows || j >= cols) return 0.0;
    return -std::max(similarity[i][j], 0.0);
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based potentials and matching; match_col[j] = row matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match_col(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match_col[0] = i;
    int j0 = 0;
    std::vector<double> min_v(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match_col[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < min_v[j]) {
          min_v[j] = reduced;
          way[j] = j0;
        }
        if (min_v[j] < delta) {
          delta = min_v[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          min_v[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const int j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= n; ++j) {
    const int i = match_col[j] - 1;
    const int col = j - 1;
    if (i < rows && col < cols && similarity[i][col] >= 0.0) {
      result.pairs.emplace_back(i, col);
      result.total += similarity[i][col];
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace corefkit
