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
#ifndef COREFKIT_ASSIGNMENT_H_
#define COREFKIT_ASSIGNMENT_H_

#include <utility>
#include <vector>

namespace corefkit {

struct Assignment {
  // (row, column) pairs, sorted by row.
  std::vector<std::pair<int, int>> pairs;
  double total = 0.0;
};

// Maximum-weight one-to-one partial matching of rows to columns
// (Kuhn-Munkres with potentials, cubic time). similarity holds one vector per
// row, all of equal length. Pairs with negative similarity are never
// part of the result.
Assignment OptimalAssignment(const std::vector<std::vector<double>> &similarity);

}  // namespace corefkit

#endif  // COREFKIT_ASSIGNMENT_H_
