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

#ifndef COREFKIT_TRAINER_H_
#define COREFKIT_TRAINER_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "corefkit/corpus.h"
#include "corefkit/model_params.h"

namespace corefkit {

// Adam with one learning rate per parameter group.
class AdamOptimizer {
 public:
  AdamOptimizer(const ModelParams &params, double lr_encoder, double lr_task,
                double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8);

  // Applies one update from the accumulated gradients.
  void Step(ModelParams *params);

 private:
  double lr_encoder_;
  double lr_task_;
  double beta1_;
  double beta2_;
  double epsilon_;
  int64_t step_ = 0;
  std::vector<Eigen::MatrixXd> first_moment_;
  std::vector<Eigen::MatrixXd> second_moment_;
};

struct TrainConfig {
  ModelConfig model;
  // One step processes one document.
  int steps = 100000;
  // Dev evaluation interval; 0 disables evaluation and early stopping.
  int eval_every = 1000;
  uint64_t seed = 1;
  // Score dev documents against gold with singletons removed.
  bool dev_filter_singletons = true;
};

struct TrainLog {
  std::vector<double> step_losses;
  // (step, dev CoNLL F1 in [0, 1]).
  std::vector<std::pair<int, double>> dev_scores;
  int best_step = 0;
  double best_dev_f1 = -1.0;
  // Gold mentions the model cannot represent, over the training corpus.
  int dropped_discontinuous = 0;
  int dropped_too_wide = 0;
};

struct TrainResult {
  ModelParams params;
  TrainLog log;
};

using ProgressFn = std::function<void(const std::string &)>;

// Trains on one document per step, visiting documents in a seeded order that
// is reshuffled every pass. With a dev corpus and eval_every > 0 the returned
// parameters are those with the best dev CoNLL F1 (the initialization counts
// as step 0). Deterministic for a fixed config.
TrainResult Train(const Corpus &train, const Corpus *dev,
                  const TrainConfig &config, const ProgressFn &progress = {});

// Corpus-level CoNLL F1 in [0, 1] of the model on a gold corpus.
double EvaluateConllF1(const Corpus &gold, const ModelParams &params,
                       bool filter_singletons);

}  // namespace corefkit

#endif  // COREFKIT_TRAINER_H_
