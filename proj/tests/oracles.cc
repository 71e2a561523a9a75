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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "corefkit/span_model.h"
#include "corefkit/text.h"

namespace oracle {

using corefkit::Clustering;
using corefkit::MentionKey;

namespace {

Prf Make(double precision, double recall) {
  Prf out{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    out.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return out;
}

// Index of the cluster holding each mention.
std::map<MentionKey, int> Owner(const Clustering &c) {
  std::map<MentionKey, int> owner;
  for (size_t i = 0; i < c.clusters.size(); ++i) {
    for (const MentionKey &m : c.clusters[i]) owner[m] = static_cast<int>(i);
  }
  return owner;
}

// Number of parts a cluster is split into by the other clustering, counting
// each mention the other side lacks as its own part.
int Partitions(const std::vector<MentionKey> &cluster,
               const std::map<MentionKey, int> &other) {
  std::set<int> parts;
  int missing = 0;
  for (const MentionKey &m : cluster) {
    auto it = other.find(m);
    if (it == other.end()) {
      ++missing;
    } else {
      parts.insert(it->second);
    }
  }
  return static_cast<int>(parts.size()) + missing;
}

double MucRecall(const Clustering &key, const Clustering &response) {
  const auto owner = Owner(response);
  double num = 0.0;
  double den = 0.0;
  for (const auto &k : key.clusters) {
    num += static_cast<double>(k.size()) - Partitions(k, owner);
    den += static_cast<double>(k.size()) - 1.0;
  }
  return den == 0.0 ? 0.0 : num / den;
}

double BCubedRecall(const Clustering &key, const Clustering &response) {
  const auto owner = Owner(response);
  double total = 0.0;
  int count = 0;
  for (const auto &k : key.clusters) {
    for (const MentionKey &m : k) {
      ++count;
      auto it = owner.find(m);
      if (it == owner.end()) continue;
      const auto &r = response.clusters[it->second];
      int overlap = 0;
      for (const MentionKey &x : k) {
        if (std::find(r.begin(), r.end(), x) != r.end()) ++overlap;
      }
      total += static_cast<double>(overlap) / static_cast<double>(k.size());
    }
  }
  return count == 0 ? 0.0 : total / count;
}

double PhiFour(const std::vector<MentionKey> &a, const std::vector<MentionKey> &b) {
  int overlap = 0;
  for (const MentionKey &x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) ++overlap;
  }
  return 2.0 * overlap / static_cast<double>(a.size() + b.size());
}

}  // namespace

Prf Muc(const Clustering &key, const Clustering &response) {
  return Make(MucRecall(response, key), MucRecall(key, response));
}

Prf BCubed(const Clustering &key, const Clustering &response) {
  return Make(BCubedRecall(response, key), BCubedRecall(key, response));
}

double BestAssignment(const std::vector<std::vector<double>> &sim) {
  const size_t rows = sim.size();
  const size_t cols = rows == 0 ? 0 : sim[0].size();
  // Permute the larger side; pad with "unmatched" markers.
  const size_t n = std::max(rows, cols);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double total = 0.0;
    for (size_t r = 0; r < rows; ++r) {
      if (static_cast<size_t>(perm[r]) < cols) total += sim[r][perm[r]];
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Prf CeafPhi4(const Clustering &key, const Clustering &response) {
  std::vector<std::vector<double>> sim(
      key.clusters.size(), std::vector<double>(response.clusters.size()));
  for (size_t i = 0; i < key.clusters.size(); ++i) {
    for (size_t j = 0; j < response.clusters.size(); ++j) {
      sim[i][j] = PhiFour(key.clusters[i], response.clusters[j]);
    }
  }
  const double best = BestAssignment(sim);
  const double recall =
      key.clusters.empty() ? 0.0 : best / key.clusters.size();
  const double precision =
      response.clusters.empty() ? 0.0 : best / response.clusters.size();
  return Make(precision, recall);
}

Clustering RandomClustering(int num_mentions, double drop, corefkit::Rng *rng) {
  const int num_labels = 1 + static_cast<int>(rng->Index(num_mentions));
  std::vector<std::vector<MentionKey>> by_label(num_labels);
  for (int m = 0; m < num_mentions; ++m) {
    if (rng->Unit() < drop) continue;
    by_label[rng->Index(num_labels)].push_back({corefkit::Span{m, m + 1}});
  }
  Clustering out;
  for (auto &cluster : by_label) {
    if (!cluster.empty()) out.clusters.push_back(std::move(cluster));
  }
  return out;
}

namespace {

struct Net {
  const corefkit::ModelParams &p;
  int d, w, dd, h;
  std::vector<std::vector<double>> enc;  // T x d

  double At(corefkit::TensorId id, int r, int c) const {
    return p[id].value(r, c);
  }

  std::vector<double> Repr(corefkit::Span s) const {
    using corefkit::TensorId;
    std::vector<double> g;
    for (int k = 0; k < d; ++k) g.push_back(enc[s.start][k]);
    for (int k = 0; k < d; ++k) g.push_back(enc[s.end - 1][k]);
    for (int k = 0; k < d; ++k) {
      double sum = 0.0;
      for (int t = s.start; t < s.end; ++t) sum += enc[t][k];
      g.push_back(sum / s.width());
    }
    const int width = s.width();
    const int bucket = width <= 4 ? width - 1 : (width <= 7 ? 4 : 5);
    for (int k = 0; k < w; ++k) {
      g.push_back(At(TensorId::kWidthEmbedding, bucket, k));
    }
    return g;
  }

  double Ffnn(const std::vector<double> &x, corefkit::TensorId hw,
              corefkit::TensorId hb, corefkit::TensorId ow,
              corefkit::TensorId ob) const {
    double out = At(ob, 0, 0);
    for (int j = 0; j < h; ++j) {
      double a = At(hb, j, 0);
      for (size_t k = 0; k < x.size(); ++k) a += At(hw, j, k) * x[k];
      if (a > 0.0) out += At(ow, 0, j) * a;
    }
    return out;
  }

  double Mention(corefkit::Span s) const {
    using corefkit::TensorId;
    return Ffnn(Repr(s), TensorId::kMentionHiddenW, TensorId::kMentionHiddenB,
                TensorId::kMentionOutW, TensorId::kMentionOutB);
  }

  double Antecedent(corefkit::Span i, corefkit::Span j, int distance) const {
    using corefkit::TensorId;
    std::vector<double> x = Repr(i);
    const std::vector<double> gj = Repr(j);
    x.insert(x.end(), gj.begin(), gj.end());
    const int bounds[] = {1, 2, 3, 4, 7, 15, 31, 63};
    int bucket = 8;
    for (int b = 0; b < 8; ++b) {
      if (distance <= bounds[b]) {
        bucket = b;
        break;
      }
    }
    for (int k = 0; k < dd; ++k) {
      x.push_back(At(TensorId::kDistanceEmbedding, bucket, k));
    }
    return Ffnn(x, TensorId::kAntecedentHiddenW, TensorId::kAntecedentHiddenB,
                TensorId::kAntecedentOutW, TensorId::kAntecedentOutB);
  }
};

Net Build(const corefkit::Document &doc, const corefkit::ModelParams &params) {
  using corefkit::TensorId;
  const corefkit::ModelConfig &c = params.config();
  Net net{params, c.embed_dim, c.width_dim, c.distance_dim, c.hidden_dim, {}};
  const int n = static_cast<int>(doc.tokens.size());
  std::vector<int> bucket(n);
  for (int t = 0; t < n; ++t) {
    bucket[t] = static_cast<int>(
        corefkit::HashString(corefkit::Lowercase(doc.tokens[t].form),
                             c.hash_seed) %
        static_cast<uint64_t>(c.vocab_buckets));
  }
  for (int t = 0; t < n; ++t) {
    std::vector<double> mean(net.d, 0.0);
    int count = 0;
    for (int u = t - 2; u <= t + 2; ++u) {
      if (u < 0 || u >= n) continue;
      ++count;
      for (int k = 0; k < net.d; ++k) {
        mean[k] += net.At(TensorId::kEmbedding, bucket[u], k);
      }
    }
    std::vector<double> row(net.d);
    for (int k = 0; k < net.d; ++k) {
      double v = net.At(TensorId::kContextBias, k, 0) +
                 net.At(TensorId::kEmbedding, bucket[t], k);
      for (int m = 0; m < net.d; ++m) {
        v += net.At(TensorId::kContextProj, k, m) * mean[m] / count;
      }
      row[k] = v;
    }
    net.enc.push_back(row);
  }
  return net;
}

double LogSumExp(const std::vector<double> &v) {
  double top = v[0];
  for (double x : v) top = std::max(top, x);
  double sum = 0.0;
  for (double x : v) sum += std::exp(x - top);
  return top + std::log(sum);
}

}  // namespace

double MentionScore(const corefkit::Document &doc,
                    const corefkit::ModelParams &params, corefkit::Span span) {
  return Build(doc, params).Mention(span);
}

double FullEnumerationLoss(const corefkit::Document &doc,
                           const corefkit::ModelParams &params) {
  const Net net = Build(doc, params);
  const int n = static_cast<int>(doc.tokens.size());
  const int max_width = params.config().max_span_width;
  // Spans ordered by end, then start.
  std::vector<corefkit::Span> spans;
  for (int end = 1; end <= n; ++end) {
    for (int start = end - 1; start >= 0 && end - start <= max_width; --start) {
      spans.push_back({start, end});
    }
  }
  std::sort(spans.begin(), spans.end(), [](auto a, auto b) {
    return a.end != b.end ? a.end < b.end : a.start < b.start;
  });
  std::map<corefkit::Span, int> cluster_of;
  for (size_t c = 0; c < doc.clusters.size(); ++c) {
    for (const auto &m : doc.clusters[c].mentions) {
      if (m.parts.size() == 1 && m.parts[0].width() <= max_width) {
        cluster_of[m.parts[0]] = static_cast<int>(c);
      }
    }
  }
  std::vector<double> mention(spans.size());
  for (size_t i = 0; i < spans.size(); ++i) mention[i] = net.Mention(spans[i]);

  double loss = 0.0;
  for (size_t i = 0; i < spans.size(); ++i) {
    std::vector<double> all = {0.0};
    std::vector<double> gold;
    auto ci = cluster_of.find(spans[i]);
    for (size_t j = 0; j < i; ++j) {
      const double s = mention[i] + mention[j] +
                       net.Antecedent(spans[i], spans[j], static_cast<int>(i - j));
      all.push_back(s);
      auto cj = cluster_of.find(spans[j]);
      if (ci != cluster_of.end() && cj != cluster_of.end() &&
          ci->second == cj->second) {
        gold.push_back(s);
      }
    }
    if (gold.empty()) gold.push_back(0.0);
    loss += LogSumExp(all) - LogSumExp(gold);
  }
  return loss;
}

corefkit::Document RandomDocument(int num_tokens, int max_width,
                                  corefkit::Rng *rng) {
  static const char *kWords[] = {"she", "He", "the", "cat", "Anna", "saw",
                                 "it", "dog", "Boris", "ran"};
  corefkit::Document doc;
  doc.doc_id = "random";
  doc.sentences.push_back({{}, 0, num_tokens, {}});
  for (int t = 0; t < num_tokens; ++t) {
    corefkit::Token token;
    token.index = t;
    token.form = kWords[rng->Index(10)];
    doc.tokens.push_back(token);
  }
  std::set<corefkit::Span> used;
  const int num_clusters = 1 + static_cast<int>(rng->Index(2));
  for (int c = 0; c < num_clusters; ++c) {
    corefkit::Cluster cluster;
    cluster.id = "e" + std::to_string(c + 1);
    const int size = 1 + static_cast<int>(rng->Index(3));
    for (int m = 0; m < size; ++m) {
      const int width = 1 + static_cast<int>(rng->Index(
                                std::min(max_width, num_tokens)));
      const int start = static_cast<int>(rng->Index(num_tokens - width + 1));
      const corefkit::Span span{start, start + width};
      if (!used.insert(span).second) continue;
      cluster.mentions.push_back({{span}, cluster.id});
    }
    if (cluster.mentions.empty()) continue;
    std::sort(cluster.mentions.begin(), cluster.mentions.end(),
              [](const auto &a, const auto &b) { return a.parts < b.parts; });
    doc.clusters.push_back(std::move(cluster));
  }
  return doc;
}

corefkit::ModelConfig RandomConfig(int num_tokens, corefkit::Rng *rng) {
  corefkit::ModelConfig config;
  config.vocab_buckets = 8 + static_cast<int>(rng->Index(24));
  config.embed_dim = 2 + static_cast<int>(rng->Index(7));
  config.hidden_dim = 2 + static_cast<int>(rng->Index(7));
  config.width_dim = 1 + static_cast<int>(rng->Index(4));
  config.distance_dim = 1 + static_cast<int>(rng->Index(4));
  config.max_span_width = 1 + static_cast<int>(rng->Index(num_tokens));
  config.prune_ratio = 1.0;
  config.max_antecedents = 1000;
  config.hash_seed = rng->Next();
  return config;
}

GradientCheck CheckGradients(const corefkit::Document &doc,
                             const corefkit::ModelParams &params, double step,
                             double floor) {
  corefkit::ModelParams analytic = params;
  analytic.ZeroGrad();
  corefkit::DocumentLoss(doc, &analytic);
  GradientCheck out;
  corefkit::ModelParams probe = params;
  for (size_t t = 0; t < probe.tensors().size(); ++t) {
    Eigen::MatrixXd &value = probe.tensors()[t].value;
    for (Eigen::Index i = 0; i < value.size(); ++i) {
      const double saved = value.data()[i];
      const std::vector<bool> region =
          corefkit::SpanModelForward(doc, probe).RegionSignature();
      double h = step;
      double plus = 0.0;
      double minus = 0.0;
      for (int attempt = 0;; ++attempt) {
        value.data()[i] = saved + h;
        const corefkit::SpanModelForward up(doc, probe);
        plus = corefkit::DocumentLossValue(doc, probe);
        value.data()[i] = saved - h;
        const corefkit::SpanModelForward down(doc, probe);
        minus = corefkit::DocumentLossValue(doc, probe);
        value.data()[i] = saved;
        const bool smooth = up.RegionSignature() == region &&
                            down.RegionSignature() == region;
        if (smooth || attempt == 4) break;
        if (attempt == 0) ++out.shrunk;
        h /= 10.0;
      }
      const double numeric = (plus - minus) / (2.0 * h);
      const double a = analytic.tensors()[t].grad.data()[i];
      const double scale = std::max({std::abs(a), std::abs(numeric), floor});
      const double error = std::abs(a - numeric) / scale;
      ++out.checked;
      if (error > out.max_relative_error) {
        out.max_relative_error = error;
        out.worst_tensor = probe.tensors()[t].name;
      }
    }
  }
  return out;
}

}  // namespace oracle
