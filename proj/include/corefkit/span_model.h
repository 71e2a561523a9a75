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

// End-to-end span-ranking coreference model.
//
// Every continuous span up to a maximum width is a candidate mention i. Each
// candidate picks an antecedent y from Y(i) = {eps} + preceding kept spans
// with score
//
//   s(i, eps) = 0
//   s(i, j)   = s_m(i) + s_m(j) + s_a(i, j)
//
// normalized by a softmax over Y(i). Training maximizes, per document, the
// log of the probability mass on gold antecedents summed over spans; spans
// without a gold antecedent among their candidates take eps as gold.
//
// Token encodings come from hashed embeddings plus a projected mean over a
// five-token window. Any encoder producing a T x d matrix can replace it.

#ifndef COREFKIT_SPAN_MODEL_H_
#define COREFKIT_SPAN_MODEL_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "corefkit/corpus.h"
#include "corefkit/metrics.h"
#include "corefkit/model_params.h"

namespace corefkit {

// All spans of width <= max_width over num_tokens tokens, ordered by
// (end, start). With max_width >= T there are T(T+1)/2 of them.
std::vector<Span> EnumerateSpans(int num_tokens, int max_width);

int WidthBucket(int width);
// distance >= 1 is the difference of span ordinals.
int DistanceBucket(int distance);

// Embedding row of each token: hash(lowercase(form), hash_seed) mod V.
std::vector<int> TokenBuckets(const Document &doc, const ModelParams &params);

// T x d matrix; row t = proj(mean of embeddings over [t-2, t+2]) +
// embedding(t).
Eigen::MatrixXd Encode(const Document &doc, const ModelParams &params);

// [H[start], H[end-1], mean(H[start..end)), width embedding].
Eigen::VectorXd SpanRepresentation(const Eigen::MatrixXd &encoded, Span span,
                                   const ModelParams &params);

// s_m: one ReLU hidden layer and a linear output.
double MentionScore(const Eigen::VectorXd &span_repr,
                    const ModelParams &params);

// s_a over [g_i, g_j, distance embedding].
double AntecedentScore(const Eigen::VectorXd &span_i,
                       const Eigen::VectorXd &span_j, int distance,
                       const ModelParams &params);

inline double CombineScores(double mention_i, double mention_j,
                            double antecedent) {
  return mention_i + mention_j + antecedent;
}

// Max-shifted softmax.
std::vector<double> AntecedentDistribution(std::span<const double> scores);

struct PrunedSpans {
  // Indices into the span list, ascending.
  std::vector<int> kept;
  // For each kept position, the kept positions of its candidate antecedents,
  // nearest first. eps is implicit.
  std::vector<std::vector<int>> antecedents;
};

// Keeps the ceil(ratio * T) best spans by mention score (ties go to the
// earlier span), or every span when ratio >= 1. Each kept span gets at most
// max_antecedents preceding kept spans as candidates.
PrunedSpans Prune(std::span<const double> mention_scores, double ratio,
                  int num_tokens, int max_antecedents);

// Gold mentions the model can represent: continuous and no wider than the
// maximum span width.
struct GoldMentions {
  std::map<Span, int> cluster_of;
  int dropped_discontinuous = 0;
  int dropped_too_wide = 0;
};

GoldMentions ProjectGold(const Document &doc, int max_width);

// Forward computation of the model on one document, kept for the backward
// pass and for decoding. Holds a reference to params, which must outlive it
// and stay unchanged.
class SpanModelForward {
 public:
  SpanModelForward(const Document &doc, const ModelParams &params);

  int num_tokens() const { return num_tokens_; }
  const std::vector<Span> &spans() const { return spans_; }
  const Eigen::MatrixXd &encoded() const { return encoded_; }
  const Eigen::MatrixXd &span_reprs() const { return span_reprs_; }
  const Eigen::VectorXd &mention_scores() const { return mention_scores_; }
  const PrunedSpans &pruned() const { return pruned_; }

  // s(i, y) for span indices i and j < i; nullopt is eps.
  double PairwiseScore(int span_i, std::optional<int> span_j) const;
  // Candidate scores of kept position p, eps first, then antecedents in
  // PrunedSpans order.
  const std::vector<double> &CandidateScores(int kept_pos) const {
    return candidate_scores_[kept_pos];
  }

  // Negative marginal log-likelihood. Throws "non-finite-loss".
  double Loss(const GoldMentions &gold) const;
  // Same value as Loss; adds the gradient of every parameter to its grad.
  double Backward(const GoldMentions &gold, ModelParams *params) const;

  // Sign of every ReLU input followed by the kept-span mask. The loss is a
  // smooth function of the parameters while this stays unchanged.
  std::vector<bool> RegionSignature() const;

  // Highest-scoring antecedent per kept span (ties go to eps, then to the
  // nearer antecedent), closed under union-find. A mention partially
  // overlapping an earlier mention of its cluster is dropped. Clusters have
  // >= 2 mentions.
  Clustering Decode() const;

 private:
  // Per kept position, indices into candidate_scores_ of gold candidates.
  std::vector<int> GoldCandidates(int kept_pos, const GoldMentions &gold) const;

  const ModelParams &params_;
  int num_tokens_ = 0;
  std::vector<int> buckets_;
  std::vector<int> window_begin_;
  std::vector<int> window_end_;
  Eigen::MatrixXd embedded_;  // T x d
  Eigen::MatrixXd context_;   // T x d
  Eigen::MatrixXd encoded_;   // T x d

  std::vector<Span> spans_;
  Eigen::MatrixXd span_reprs_;     // N x g
  Eigen::MatrixXd mention_hidden_;  // N x h, pre-activation
  Eigen::VectorXd mention_scores_;  // N

  PrunedSpans pruned_;
  std::vector<int> pair_offset_;   // per kept position
  std::vector<int> pair_target_;   // kept position of the antecedent
  std::vector<int> pair_bucket_;
  Eigen::MatrixXd pair_hidden_;    // P x h, pre-activation
  std::vector<std::vector<double>> candidate_scores_;
};

// Loss of a document, adding gradients to params (which must not be
// modified concurrently).
double DocumentLoss(const Document &doc, ModelParams *params);
double DocumentLossValue(const Document &doc, const ModelParams &params);

Clustering Decode(const Document &doc, const ModelParams &params);

// Copy of doc whose clusters are the decoded ones, with ids "c1", "c2", ...
Document Predict(const Document &doc, const ModelParams &params);

}  // namespace corefkit

#endif  // COREFKIT_SPAN_MODEL_H_
