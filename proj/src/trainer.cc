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

#include "corefkit/trainer.h"

#include <cmath>

#include "corefkit/corpus_ops.h"
#include "corefkit/error.h"
#include "corefkit/metrics.h"
#include "corefkit/random.h"
#include "corefkit/span_model.h"
#include "corefkit/text.h"

namespace corefkit {

AdamOptimizer::AdamOptimizer(const ModelParams &params, double lr_encoder,
                             double lr_task, double beta1, double beta2,
                             double epsilon)
    : lr_encoder_(lr_encoder),
      lr_task_(lr_task),
      beta1_(beta1),
      beta2_(beta2),
      epsilon_(epsilon) {
  for (const Tensor &t : params.tensors()) {
    first_moment_.push_back(Eigen::MatrixXd::Zero(t.value.rows(), t.value.cols()));
    second_moment_.push_back(Eigen::MatrixXd::Zero(t.value.rows(), t.value.cols()));
  }
}

void AdamOptimizer::Step(ModelParams *params) {
  ++step_;
  const double correction1 = 1.0 - std::pow(beta1_, static_cast<double>(step_));
  const double correction2 = 1.0 - std::pow(beta2_, static_cast<double>(step_));
  std::vector<Tensor> &tensors = params->tensors();
  for (size_t i = 0; i < tensors.size(); ++i) {
    Tensor &t = tensors[i];
    const double lr = t.group == ParamGroup::kEncoder ? lr_encoder_ : lr_task_;
    first_moment_[i] = beta1_ * first_moment_[i] + (1.0 - beta1_) * t.grad;
    second_moment_[i] =
        beta2_ * second_moment_[i] + (1.0 - beta2_) * t.grad.cwiseAbs2();
    t.value.array() -=
        lr * (first_moment_[i].array() / correction1) /
        ((second_moment_[i].array() / correction2).sqrt() + epsilon_);
  }
}

double EvaluateConllF1(const Corpus &gold, const ModelParams &params,
                       bool filter_singletons) {
  CorpusScorer scorer;
  for (const Document &doc : gold.documents) {
    const Document key = filter_singletons ? FilterSingletons(doc) : doc;
    scorer.Add(ToClustering(key), Decode(doc, params));
  }
  return scorer.Score().conll_f1;
}

TrainResult Train(const Corpus &train, const Corpus *dev,
                  const TrainConfig &config, const ProgressFn &progress) {
  if (train.documents.empty()) {
    throw CorefError("empty-corpus", "training corpus has no documents");
  }
  TrainResult result{ModelParams::Random(config.model, config.seed), {}};
  ModelParams &params = result.params;
  TrainLog &log = result.log;
  for (const Document &doc : train.documents) {
    const GoldMentions gold = ProjectGold(doc, config.model.max_span_width);
    log.dropped_discontinuous += gold.dropped_discontinuous;
    log.dropped_too_wide += gold.dropped_too_wide;
  }

  const bool evaluate = dev != nullptr && !dev->documents.empty() &&
                        config.eval_every > 0;
  ModelParams best = params;
  if (evaluate) {
    log.best_dev_f1 =
        EvaluateConllF1(*dev, params, config.dev_filter_singletons);
    log.dev_scores.emplace_back(0, log.best_dev_f1);
  }

  AdamOptimizer optimizer(params, config.model.lr_encoder,
                          config.model.lr_task);
  Rng order_rng(config.seed ^ 0x5851F42D4C957F2DULL);
  std::vector<size_t> order(train.documents.size());
  size_t cursor = order.size();
  for (int step = 1; step <= config.steps; ++step) {
    if (cursor == order.size()) {
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      Shuffle(&order, &order_rng);
      cursor = 0;
    }
    const Document &doc = train.documents[order[cursor++]];
    params.ZeroGrad();
    const double loss = DocumentLoss(doc, &params);
    log.step_losses.push_back(loss);
    optimizer.Step(&params);
    if (!params.AllFinite()) {
      throw CorefError("non-finite-loss",
                       "parameters diverged at step " + std::to_string(step));
    }

    if (evaluate && step % config.eval_every == 0) {
      const double f1 =
          EvaluateConllF1(*dev, params, config.dev_filter_singletons);
      log.dev_scores.emplace_back(step, f1);
      if (f1 > log.best_dev_f1) {
        log.best_dev_f1 = f1;
        log.best_step = step;
        best = params;
      }
      if (progress) {
        progress("step " + std::to_string(step) + " dev_f1 " +
                 FormatFixed(100.0 * f1, 3));
      }
    }
  }
  if (evaluate) {
    params = std::move(best);
  } else {
    log.best_step = config.steps;
  }
  params.ZeroGrad();
  return result;
}

}  // namespace corefkit
