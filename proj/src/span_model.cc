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

#include "corefkit/span_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "corefkit/conllu.h"
#include "corefkit/error.h"
#include "corefkit/text.h"

namespace corefkit {

namespace {

double LogSumExp(const std::vector<double> &values,
                 const std::vector<int> &subset) {
  double max = -std::numeric_limits<double>::infinity();
  for (int i : subset) max = std::max(max, values[i]);
  double sum = 0.0;
  for (int i : subset) sum += std::exp(values[i] - max);
  return max + std::log(sum);
}

double Relu(double x) { return x > 0.0 ? x : 0.0; }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<Span> EnumerateSpans(int num_tokens, int max_width) {
  std::vector<Span> spans;
  for (int end = 1; end <= num_tokens; ++end) {
    for (int start = std::max(0, end - max_width); start < end; ++start) {
      spans.push_back({start, end});
    }
  }
  return spans;
}

int WidthBucket(int width) {
  if (width <= 4) return std::max(width, 1) - 1;
  if (width <= 7) return 4;
  return 5;
}

int DistanceBucket(int distance) {
  if (distance <= 4) return std::max(distance, 1) - 1;
  if (distance <= 7) return 4;
  if (distance <= 15) return 5;
  if (distance <= 31) return 6;
  if (distance <= 63) return 7;
  return 8;
}

std::vector<int> TokenBuckets(const Document &doc, const ModelParams &params) {
  const ModelConfig &config = params.config();
  std::vector<int> buckets;
  buckets.reserve(doc.tokens.size());
  for (const Token &token : doc.tokens) {
    const uint64_t hash = HashString(Lowercase(token.form), config.hash_seed);
    buckets.push_back(static_cast<int>(hash % config.vocab_buckets));
  }
  return buckets;
}

Eigen::MatrixXd Encode(const Document &doc, const ModelParams &params) {
  const Eigen::MatrixXd &embedding = params[TensorId::kEmbedding].value;
  const Eigen::MatrixXd &proj = params[TensorId::kContextProj].value;
  const Eigen::MatrixXd &bias = params[TensorId::kContextBias].value;
  const std::vector<int> buckets = TokenBuckets(doc, params);
  const int num_tokens = static_cast<int>(buckets.size());
  const int dim = params.config().embed_dim;

  Eigen::MatrixXd encoded(num_tokens, dim);
  for (int t = 0; t < num_tokens; ++t) {
    const int begin = std::max(0, t - 2);
    const int end = std::min(num_tokens, t + 3);
    Eigen::VectorXd context = Eigen::VectorXd::Zero(dim);
    for (int u = begin; u < end; ++u) {
      context += embedding.row(buckets[u]).transpose();
    }
    context /= static_cast<double>(end - begin);
    encoded.row(t) =
        (proj * context + bias.col(0) + embedding.row(buckets[t]).transpose())
            .transpose();
  }
  return encoded;
}

Eigen::VectorXd SpanRepresentation(const Eigen::MatrixXd &encoded, Span span,
                                   const ModelParams &params) {
  const ModelConfig &config = params.config();
  const int d = config.embed_dim;
  Eigen::VectorXd repr(config.span_dim());
  repr.segment(0, d) = encoded.row(span.start).transpose();
  repr.segment(d, d) = encoded.row(span.end - 1).transpose();
  repr.segment(2 * d, d) =
      encoded.middleRows(span.start, span.width()).colwise().mean().transpose();
  repr.segment(3 * d, config.width_dim) =
      params[TensorId::kWidthEmbedding]
          .value.row(WidthBucket(span.width()))
          .transpose();
  return repr;
}

double MentionScore(const Eigen::VectorXd &span_repr,
                    const ModelParams &params) {
  const Eigen::VectorXd hidden =
      (params[TensorId::kMentionHiddenW].value * span_repr +
       params[TensorId::kMentionHiddenB].value.col(0))
          .unaryExpr(&Relu);
  return params[TensorId::kMentionOutW].value.row(0).dot(hidden) +
         params[TensorId::kMentionOutB].value(0, 0);
}

double AntecedentScore(const Eigen::VectorXd &span_i,
                       const Eigen::VectorXd &span_j, int distance,
                       const ModelParams &params) {
  const int g = params.config().span_dim();
  Eigen::VectorXd input(params.config().pair_dim());
  input.segment(0, g) = span_i;
  input.segment(g, g) = span_j;
  input.tail(params.config().distance_dim) =
      params[TensorId::kDistanceEmbedding]
          .value.row(DistanceBucket(distance))
          .transpose();
  const Eigen::VectorXd hidden =
      (params[TensorId::kAntecedentHiddenW].value * input +
       params[TensorId::kAntecedentHiddenB].value.col(0))
          .unaryExpr(&Relu);
  return params[TensorId::kAntecedentOutW].value.row(0).dot(hidden) +
         params[TensorId::kAntecedentOutB].value(0, 0);
}

std::vector<double> AntecedentDistribution(std::span<const double> scores) {
  std::vector<double> probs(scores.size());
  if (scores.empty()) return probs;
  const double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(scores[i] - max);
    sum += probs[i];
  }
  for (double &p : probs) p /= sum;
  return probs;
}

PrunedSpans Prune(std::span<const double> mention_scores, double ratio,
                  int num_tokens, int max_antecedents) {
  const int num_spans = static_cast<int>(mention_scores.size());
  int keep = num_spans;
  if (ratio < 1.0) {
    // The small offset keeps e.g. 0.7 * 10 from rounding up to 8.
    keep = static_cast<int>(std::ceil(ratio * num_tokens - 1e-9));
    keep = std::clamp(keep, 0, num_spans);
  }
  std::vector<int> order(num_spans);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return mention_scores[a] > mention_scores[b];
  });
  PrunedSpans pruned;
  pruned.kept.assign(order.begin(), order.begin() + keep);
  std::sort(pruned.kept.begin(), pruned.kept.end());
  pruned.antecedents.resize(keep);
  for (int p = 0; p < keep; ++p) {
    const int first = std::max(0, p - max_antecedents);
    for (int q = p - 1; q >= first; --q) pruned.antecedents[p].push_back(q);
  }
  return pruned;
}

GoldMentions ProjectGold(const Document &doc, int max_width) {
  GoldMentions gold;
  for (size_t c = 0; c < doc.clusters.size(); ++c) {
    for (const Mention &mention : doc.clusters[c].mentions) {
      if (mention.is_discontinuous()) {
        ++gold.dropped_discontinuous;
      } else if (mention.parts.front().width() > max_width) {
        ++gold.dropped_too_wide;
      } else {
        gold.cluster_of.emplace(mention.parts.front(), static_cast<int>(c));
      }
    }
  }
  return gold;
}

SpanModelForward::SpanModelForward(const Document &doc,
                                   const ModelParams &params)
    : params_(params) {
  const ModelConfig &config = params.config();
  const int d = config.embed_dim;
  const int h = config.hidden_dim;
  const int g = config.span_dim();
  const Eigen::MatrixXd &embedding = params[TensorId::kEmbedding].value;

  // Encoder.
  buckets_ = TokenBuckets(doc, params);
  num_tokens_ = static_cast<int>(buckets_.size());
  embedded_.resize(num_tokens_, d);
  context_.resize(num_tokens_, d);
  window_begin_.resize(num_tokens_);
  window_end_.resize(num_tokens_);
  for (int t = 0; t < num_tokens_; ++t) {
    embedded_.row(t) = embedding.row(buckets_[t]);
  }
  for (int t = 0; t < num_tokens_; ++t) {
    window_begin_[t] = std::max(0, t - 2);
    window_end_[t] = std::min(num_tokens_, t + 3);
    context_.row(t) = embedded_.middleRows(window_begin_[t],
                                           window_end_[t] - window_begin_[t])
                          .colwise()
                          .mean();
  }
  encoded_ = context_ * params[TensorId::kContextProj].value.transpose();
  encoded_.rowwise() += params[TensorId::kContextBias].value.col(0).transpose();
  encoded_ += embedded_;

  // Span representations and mention scores.
  spans_ = EnumerateSpans(num_tokens_, config.max_span_width);
  const int num_spans = static_cast<int>(spans_.size());
  span_reprs_.resize(num_spans, g);
  for (int s = 0; s < num_spans; ++s) {
    span_reprs_.row(s) = SpanRepresentation(encoded_, spans_[s], params);
  }
  mention_hidden_ = span_reprs_ * params[TensorId::kMentionHiddenW].value.transpose();
  mention_hidden_.rowwise() +=
      params[TensorId::kMentionHiddenB].value.col(0).transpose();
  mention_scores_ =
      mention_hidden_.unaryExpr(&Relu) *
          params[TensorId::kMentionOutW].value.row(0).transpose() +
      Eigen::VectorXd::Constant(num_spans,
                                params[TensorId::kMentionOutB].value(0, 0));

  pruned_ = Prune(std::span<const double>(mention_scores_.data(), num_spans),
                  config.prune_ratio, num_tokens_, config.max_antecedents);

  // Pair scores. The hidden layer of s_a splits into a block for g_i, one for
  // g_j and one for the distance embedding.
  const int kept = static_cast<int>(pruned_.kept.size());
  Eigen::MatrixXd kept_reprs(kept, g);
  for (int p = 0; p < kept; ++p) kept_reprs.row(p) = span_reprs_.row(pruned_.kept[p]);
  const Eigen::MatrixXd &hidden_w = params[TensorId::kAntecedentHiddenW].value;
  const Eigen::MatrixXd from_i = kept_reprs * hidden_w.leftCols(g).transpose();
  const Eigen::MatrixXd from_j =
      kept_reprs * hidden_w.middleCols(g, g).transpose();
  const Eigen::MatrixXd from_distance =
      params[TensorId::kDistanceEmbedding].value *
      hidden_w.rightCols(config.distance_dim).transpose();
  const Eigen::RowVectorXd hidden_b =
      params[TensorId::kAntecedentHiddenB].value.col(0).transpose();
  const Eigen::RowVectorXd out_w = params[TensorId::kAntecedentOutW].value.row(0);
  const double out_b = params[TensorId::kAntecedentOutB].value(0, 0);

  int num_pairs = 0;
  pair_offset_.resize(kept);
  for (int p = 0; p < kept; ++p) {
    pair_offset_[p] = num_pairs;
    num_pairs += static_cast<int>(pruned_.antecedents[p].size());
  }
  pair_target_.resize(num_pairs);
  pair_bucket_.resize(num_pairs);
  pair_hidden_.resize(num_pairs, h);
  candidate_scores_.resize(kept);
  for (int p = 0; p < kept; ++p) {
    std::vector<double> &scores = candidate_scores_[p];
    scores.assign(1, 0.0);
    const double mention_i = mention_scores_(pruned_.kept[p]);
    for (size_t c = 0; c < pruned_.antecedents[p].size(); ++c) {
      const int q = pruned_.antecedents[p][c];
      const int pair = pair_offset_[p] + static_cast<int>(c);
      const int bucket =
          DistanceBucket(pruned_.kept[p] - pruned_.kept[q]);
      pair_target_[pair] = q;
      pair_bucket_[pair] = bucket;
      pair_hidden_.row(pair) =
          from_i.row(p) + from_j.row(q) + from_distance.row(bucket) + hidden_b;
      const double antecedent =
          pair_hidden_.row(pair).unaryExpr(&Relu).dot(out_w) + out_b;
      scores.push_back(CombineScores(
          mention_i, mention_scores_(pruned_.kept[q]), antecedent));
    }
  }
}

double SpanModelForward::PairwiseScore(int span_i,
                                       std::optional<int> span_j) const {
  if (!span_j) return 0.0;
  if (*span_j < 0 || *span_j >= span_i ||
      span_i >= static_cast<int>(spans_.size())) {
    throw CorefError("bad-candidate", "antecedent must precede the span");
  }
  const double antecedent = AntecedentScore(
      span_reprs_.row(span_i).transpose(), span_reprs_.row(*span_j).transpose(),
      span_i - *span_j, params_);
  return CombineScores(mention_scores_(span_i), mention_scores_(*span_j),
                       antecedent);
}

std::vector<int> SpanModelForward::GoldCandidates(
    int kept_pos, const GoldMentions &gold) const {
  std::vector<int> out;
  auto it = gold.cluster_of.find(spans_[pruned_.kept[kept_pos]]);
  if (it != gold.cluster_of.end()) {
    const auto &antecedents = pruned_.antecedents[kept_pos];
    for (size_t c = 0; c < antecedents.size(); ++c) {
      auto other = gold.cluster_of.find(spans_[pruned_.kept[antecedents[c]]]);
      if (other != gold.cluster_of.end() && other->second == it->second) {
        out.push_back(static_cast<int>(c) + 1);
      }
    }
  }
  if (out.empty()) out.push_back(0);
  return out;
}

double SpanModelForward::Loss(const GoldMentions &gold) const {
  double loss = 0.0;
  for (size_t p = 0; p < candidate_scores_.size(); ++p) {
    const std::vector<double> &scores = candidate_scores_[p];
    std::vector<int> all(scores.size());
    std::iota(all.begin(), all.end(), 0);
    loss += LogSumExp(scores, all) -
            LogSumExp(scores, GoldCandidates(static_cast<int>(p), gold));
  }
  if (!std::isfinite(loss)) {
    throw CorefError("non-finite-loss", "loss is " + std::to_string(loss));
  }
  return loss;
}

double SpanModelForward::Backward(const GoldMentions &gold,
                                  ModelParams *params) const {
  const ModelConfig &config = params_.config();
  const int d = config.embed_dim;
  const int g = config.span_dim();
  const int h = config.hidden_dim;
  const int num_spans = static_cast<int>(spans_.size());
  const int kept = static_cast<int>(pruned_.kept.size());
  const int num_pairs = static_cast<int>(pair_target_.size());

  // d loss / d s(i, y) = P(y) - P(y | y in GOLD(i)).
  double loss = 0.0;
  Eigen::VectorXd d_mention = Eigen::VectorXd::Zero(num_spans);
  Eigen::VectorXd d_antecedent = Eigen::VectorXd::Zero(num_pairs);
  for (int p = 0; p < kept; ++p) {
    const std::vector<double> &scores = candidate_scores_[p];
    std::vector<int> all(scores.size());
    std::iota(all.begin(), all.end(), 0);
    const std::vector<int> gold_set = GoldCandidates(p, gold);
    const double log_all = LogSumExp(scores, all);
    const double log_gold = LogSumExp(scores, gold_set);
    loss += log_all - log_gold;
    std::vector<double> d_score(scores.size());
    for (size_t c = 0; c < scores.size(); ++c) {
      d_score[c] = std::exp(scores[c] - log_all);
    }
    for (int c : gold_set) d_score[c] -= std::exp(scores[c] - log_gold);
    for (size_t c = 1; c < scores.size(); ++c) {
      const int pair = pair_offset_[p] + static_cast<int>(c) - 1;
      d_mention(pruned_.kept[p]) += d_score[c];
      d_mention(pruned_.kept[pair_target_[pair]]) += d_score[c];
      d_antecedent(pair) = d_score[c];
    }
  }
  if (!std::isfinite(loss)) {
    throw CorefError("non-finite-loss", "loss is " + std::to_string(loss));
  }

  // Antecedent scorer.
  const Eigen::MatrixXd &ant_w = params_[TensorId::kAntecedentHiddenW].value;
  const Eigen::RowVectorXd ant_out =
      params_[TensorId::kAntecedentOutW].value.row(0);
  Eigen::MatrixXd d_pair_hidden(num_pairs, h);
  Eigen::MatrixXd d_from_i = Eigen::MatrixXd::Zero(kept, h);
  Eigen::MatrixXd d_from_j = Eigen::MatrixXd::Zero(kept, h);
  Eigen::MatrixXd d_from_distance = Eigen::MatrixXd::Zero(kDistanceBuckets, h);
  Eigen::RowVectorXd d_ant_out = Eigen::RowVectorXd::Zero(h);
  double d_ant_out_b = 0.0;
  for (int p = 0; p < kept; ++p) {
    const int count = static_cast<int>(pruned_.antecedents[p].size());
    for (int c = 0; c < count; ++c) {
      const int pair = pair_offset_[p] + c;
      const double upstream = d_antecedent(pair);
      const Eigen::RowVectorXd z = pair_hidden_.row(pair);
      d_ant_out += upstream * z.unaryExpr(&Relu);
      d_ant_out_b += upstream;
      Eigen::RowVectorXd dz = upstream * ant_out;
      for (int k = 0; k < h; ++k) {
        if (z(k) <= 0.0) dz(k) = 0.0;
      }
      d_pair_hidden.row(pair) = dz;
      d_from_i.row(p) += dz;
      d_from_j.row(pair_target_[pair]) += dz;
      d_from_distance.row(pair_bucket_[pair]) += dz;
    }
  }
  Eigen::MatrixXd kept_reprs(kept, g);
  for (int p = 0; p < kept; ++p) kept_reprs.row(p) = span_reprs_.row(pruned_.kept[p]);
  const Eigen::MatrixXd &distance_emb = params_[TensorId::kDistanceEmbedding].value;

  Eigen::MatrixXd &g_ant_w = (*params)[TensorId::kAntecedentHiddenW].grad;
  g_ant_w.leftCols(g) += d_from_i.transpose() * kept_reprs;
  g_ant_w.middleCols(g, g) += d_from_j.transpose() * kept_reprs;
  g_ant_w.rightCols(config.distance_dim) +=
      d_from_distance.transpose() * distance_emb;
  if (num_pairs > 0) {
    (*params)[TensorId::kAntecedentHiddenB].grad.col(0) +=
        d_pair_hidden.colwise().sum().transpose();
  }
  (*params)[TensorId::kAntecedentOutW].grad.row(0) += d_ant_out;
  (*params)[TensorId::kAntecedentOutB].grad(0, 0) += d_ant_out_b;
  (*params)[TensorId::kDistanceEmbedding].grad +=
      d_from_distance * ant_w.rightCols(config.distance_dim);
  const Eigen::MatrixXd d_kept_reprs =
      d_from_i * ant_w.leftCols(g) + d_from_j * ant_w.middleCols(g, g);

  // Mention scorer, only for kept spans (the rest do not affect the loss).
  const Eigen::MatrixXd &men_w = params_[TensorId::kMentionHiddenW].value;
  const Eigen::RowVectorXd men_out =
      params_[TensorId::kMentionOutW].value.row(0);
  Eigen::MatrixXd &g_men_w = (*params)[TensorId::kMentionHiddenW].grad;
  Eigen::MatrixXd d_span_reprs = Eigen::MatrixXd::Zero(num_spans, g);
  for (int p = 0; p < kept; ++p) {
    const int s = pruned_.kept[p];
    const double upstream = d_mention(s);
    const Eigen::RowVectorXd z = mention_hidden_.row(s);
    (*params)[TensorId::kMentionOutW].grad.row(0) += upstream * z.unaryExpr(&Relu);
    (*params)[TensorId::kMentionOutB].grad(0, 0) += upstream;
    Eigen::RowVectorXd dz = upstream * men_out;
    for (int k = 0; k < h; ++k) {
      if (z(k) <= 0.0) dz(k) = 0.0;
    }
    g_men_w += dz.transpose() * span_reprs_.row(s);
    (*params)[TensorId::kMentionHiddenB].grad.col(0) += dz.transpose();
    d_span_reprs.row(s) = dz * men_w + d_kept_reprs.row(p);
  }

  // Span representations.
  Eigen::MatrixXd d_encoded = Eigen::MatrixXd::Zero(num_tokens_, d);
  Eigen::MatrixXd &g_width = (*params)[TensorId::kWidthEmbedding].grad;
  for (int p = 0; p < kept; ++p) {
    const int s = pruned_.kept[p];
    const Span span = spans_[s];
    const Eigen::RowVectorXd upstream = d_span_reprs.row(s);
    d_encoded.row(span.start) += upstream.segment(0, d);
    d_encoded.row(span.end - 1) += upstream.segment(d, d);
    const Eigen::RowVectorXd mean_part =
        upstream.segment(2 * d, d) / static_cast<double>(span.width());
    for (int t = span.start; t < span.end; ++t) d_encoded.row(t) += mean_part;
    g_width.row(WidthBucket(span.width())) += upstream.tail(config.width_dim);
  }

  // Encoder: encoded = context * proj^T + bias + embedded.
  const Eigen::MatrixXd &proj = params_[TensorId::kContextProj].value;
  (*params)[TensorId::kContextProj].grad += d_encoded.transpose() * context_;
  if (num_tokens_ > 0) {
    (*params)[TensorId::kContextBias].grad.col(0) +=
        d_encoded.colwise().sum().transpose();
  }
  const Eigen::MatrixXd d_context = d_encoded * proj;
  Eigen::MatrixXd d_embedded = d_encoded;
  for (int t = 0; t < num_tokens_; ++t) {
    const double share = 1.0 / (window_end_[t] - window_begin_[t]);
    for (int u = window_begin_[t]; u < window_end_[t]; ++u) {
      d_embedded.row(u) += share * d_context.row(t);
    }
  }
  Eigen::MatrixXd &g_embedding = (*params)[TensorId::kEmbedding].grad;
  for (int t = 0; t < num_tokens_; ++t) {
    g_embedding.row(buckets_[t]) += d_embedded.row(t);
  }
  return loss;
}

std::vector<bool> SpanModelForward::RegionSignature() const {
  std::vector<bool> signature;
  signature.reserve(mention_hidden_.size() + pair_hidden_.size() +
                    spans_.size());
  for (Eigen::Index i = 0; i < mention_hidden_.size(); ++i) {
    signature.push_back(mention_hidden_.data()[i] > 0.0);
  }
  for (Eigen::Index i = 0; i < pair_hidden_.size(); ++i) {
    signature.push_back(pair_hidden_.data()[i] > 0.0);
  }
  std::vector<bool> kept(spans_.size(), false);
  for (int k : pruned_.kept) kept[k] = true;
  signature.insert(signature.end(), kept.begin(), kept.end());
  return signature;
}

Clustering SpanModelForward::Decode() const {
  const int kept = static_cast<int>(pruned_.kept.size());
  UnionFind links(kept);
  std::vector<bool> linked(kept, false);
  for (int p = 0; p < kept; ++p) {
    const std::vector<double> &scores = candidate_scores_[p];
    size_t best = 0;
    for (size_t c = 1; c < scores.size(); ++c) {
      if (scores[c] > scores[best]) best = c;
    }
    if (best == 0) continue;
    const int q = pruned_.antecedents[p][best - 1];
    links.Union(p, q);
    linked[p] = linked[q] = true;
  }
  std::map<int, std::vector<MentionKey>> groups;
  for (int p = 0; p < kept; ++p) {
    if (linked[p]) groups[links.Find(p)].push_back({spans_[pruned_.kept[p]]});
  }
  Clustering clustering;
  for (auto &[root, mentions] : groups) {
    // Drop mentions partially overlapping an earlier one of the cluster.
    std::sort(mentions.begin(), mentions.end());
    std::vector<MentionKey> kept_mentions;
    for (MentionKey &mention : mentions) {
      const Span &b = mention.front();
      const bool crosses = std::any_of(
          kept_mentions.begin(), kept_mentions.end(), [&](const MentionKey &k) {
            const Span &a = k.front();
            return a.start < b.start && b.start < a.end && a.end < b.end;
          });
      if (!crosses) kept_mentions.push_back(std::move(mention));
    }
    if (kept_mentions.size() >= 2) {
      clustering.clusters.push_back(std::move(kept_mentions));
    }
  }
  return clustering;
}

double DocumentLoss(const Document &doc, ModelParams *params) {
  if (!params->AllFinite()) {
    throw CorefError("non-finite-loss", "non-finite parameter");
  }
  const SpanModelForward forward(doc, *params);
  return forward.Backward(ProjectGold(doc, params->config().max_span_width),
                          params);
}

double DocumentLossValue(const Document &doc, const ModelParams &params) {
  if (!params.AllFinite()) {
    throw CorefError("non-finite-loss", "non-finite parameter");
  }
  const SpanModelForward forward(doc, params);
  return forward.Loss(ProjectGold(doc, params.config().max_span_width));
}

Clustering Decode(const Document &doc, const ModelParams &params) {
  return SpanModelForward(doc, params).Decode();
}

Document Predict(const Document &doc, const ModelParams &params) {
  Document out = doc;
  out.clusters.clear();
  const Clustering clustering = Decode(doc, params);
  for (size_t c = 0; c < clustering.clusters.size(); ++c) {
    Cluster cluster;
    cluster.id = "c" + std::to_string(c + 1);
    for (const MentionKey &key : clustering.clusters[c]) {
      cluster.mentions.push_back(Mention{key, cluster.id});
    }
    out.clusters.push_back(std::move(cluster));
  }
  CanonicalizeClusters(&out);
  return out;
}

}  // namespace corefkit
