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

#ifndef COREFKIT_CONFIDENCE_H_
#define COREFKIT_CONFIDENCE_H_

#include <span>

namespace corefkit {

struct Interval {
  double mean = 0.0;
  double halfwidth = 0.0;
};

// Two-sided Student-t interval: halfwidth = t_{(1+level)/2, n-1} * s / sqrt(n)
// with the n-1 sample standard deviation. Throws "too-few-samples" for n < 2.
Interval ConfidenceInterval(std::span<const double> samples,
                            double level = 0.95);

// Quantile of Student's t distribution with dof degrees of freedom.
double StudentTQuantile(double probability, int dof);

}  // namespace corefkit

#endif  // COREFKIT_CONFIDENCE_H_
