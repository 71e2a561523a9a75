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

#include "corefkit/confidence.h"

#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "corefkit/error.h"

namespace corefkit {

double StudentTQuantile(double probability, int dof) {
  const boost::math::students_t distribution(static_cast<double>(dof));
  return boost::math::quantile(distribution, probability);
}

Interval ConfidenceInterval(std::span<const double> samples, double level) {
  const size_t n = samples.size();
  if (n < 2) {
    throw CorefError("too-few-samples",
                     "need at least 2 samples, got " + std::to_string(n));
  }
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double squares = 0.0;
  for (double x : samples) squares += (x - mean) * (x - mean);
  const double sd = std::sqrt(squares / static_cast<double>(n - 1));
  const double t =
      StudentTQuantile(0.5 + level / 2.0, static_cast<int>(n - 1));
  return {mean, t * sd / std::sqrt(static_cast<double>(n))};
}

}  // namespace corefkit
