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

#include "corefkit/metrics.h"

#include <map>
#include <set>

#include "corefkit/assignment.h"
#include "corefkit/corpus_ops.h"

namespace corefkit {

namespace {

double SafeDiv(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Maps every mention of a clustering to the index of its cluster.
std::map<MentionKey, int> ClusterIndex(const Clustering &clustering) {
  std::map<MentionKey, int> index;
  for (size_t c = 0; c < clustering.clusters.size(); ++c) {
    for (const MentionKey &mention : clustering.clusters[c]) {
      index.emplace(mention, static_cast<int>(c));
    }
  }
  return index;
}

// MUC recall numerator and denominator of `key` partitioned by `response`.
std::pair<double, double> MucSide(const Clustering &key,
                                  const Clustering &response) {
  const std::map<MentionKey, int> response_index = ClusterIndex(response);
  double num = 0.0;
  double den = 0.0;
  for (const auto &cluster : key.clusters) {
    if (cluster.empty()) continue;
    std::set<int> partitions;
    int unaligned = 0;
    for (const MentionKey &mention : cluster) {
      auto it = response_index.find(mention);
      if (it == response_index.end()) {
        ++unaligned;
      } else {
        partitions.insert(it->second);
      }
    }
    const double size = static_cast<double>(cluster.size());
    num += size - static_cast<double>(partitions.size() + unaligned);
    den += size - 1.0;
  }
  return {num, den};
}

// B-cubed recall numerator: sum over key clusters K and response clusters R
// of |K n R|^2 / |K|.
double BCubedSide(const Clustering &key, const Clustering &response) {
  const std::map<MentionKey, int> response_index = ClusterIndex(response);
  double num = 0.0;
  for (const auto &cluster : key.clusters) {
    if (cluster.empty()) continue;
    std::map<int, int> overlap;
    for (const MentionKey &mention : cluster) {
      auto it = response_index.find(mention);
      if (it != response_index.end()) ++overlap[it->second];
    }
    for (const auto &[r, count] : overlap) {
      num += static_cast<double>(count) * count / cluster.size();
    }
  }
  return num;
}

double MentionTotal(const Clustering &clustering) {
  double total = 0.0;
  for (const auto &cluster : clustering.clusters) total += cluster.size();
  return total;
}

}  // namespace

PRF MakePRF(double precision, double recall) {
  PRF prf{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    prf.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return prf;
}

Clustering ToClustering(const Document &doc) {
  Clustering clustering;
  for (const Cluster &cluster : doc.clusters) {
    std::vector<MentionKey> mentions;
    for (const Mention &mention : cluster.mentions) {
      mentions.push_back(mention.parts);
    }
    clustering.clusters.push_back(std::move(mentions));
  }
  return clustering;
}

MetricCounts &MetricCounts::operator+=(const MetricCounts &other) {
  recall_num += other.recall_num;
  recall_den += other.recall_den;
  precision_num += other.precision_num;
  precision_den += other.precision_den;
  return *this;
}

PRF MetricCounts::prf() const {
  return MakePRF(SafeDiv(precision_num, precision_den),
                 SafeDiv(recall_num, recall_den));
}

MetricCounts MucCounts(const Clustering &key, const Clustering &response) {
  const auto [r_num, r_den] = MucSide(key, response);
  const auto [p_num, p_den] = MucSide(response, key);
  return {r_num, r_den, p_num, p_den};
}

MetricCounts BCubedCounts(const Clustering &key, const Clustering &response) {
  return {BCubedSide(key, response), MentionTotal(key),
          BCubedSide(response, key), MentionTotal(response)};
}

double Phi4(const std::vector<MentionKey> &key,
            const std::vector<MentionKey> &response) {
  if (key.empty() && response.empty()) return 0.0;
  const std::set<MentionKey> key_set(key.begin(), key.end());
  int common = 0;
  for (const MentionKey &mention : response) {
    if (key_set.count(mention)) ++common;
  }
  return 2.0 * common / static_cast<double>(key.size() + response.size());
}

MetricCounts CeafPhi4Counts(const Clustering &key,
                            const Clustering &response) {
  MetricCounts counts;
  counts.recall_den = static_cast<double>(key.clusters.size());
  counts.precision_den = static_cast<double>(response.clusters.size());
  if (key.clusters.empty() || response.clusters.empty()) return counts;

  std::vector<std::vector<double>> similarity(
      key.clusters.size(), std::vector<double>(response.clusters.size(), 0.0));
  for (size_t k = 0; k < key.clusters.size(); ++k) {
    for (size_t r = 0; r < response.clusters.size(); ++r) {
      similarity[k][r] = Phi4(key.clusters[k], response.clusters[r]);
    }
  }
  const double total = OptimalAssignment(similarity).total;
  counts.recall_num = total;
  counts.precision_num = total;
  return counts;
}

PRF Muc(const Clustering &key, const Clustering &response) {
  return MucCounts(key, response).prf();
}

PRF BCubed(const Clustering &key, const Clustering &response) {
  return BCubedCounts(key, response).prf();
}

PRF CeafPhi4(const Clustering &key, const Clustering &response) {
  return CeafPhi4Counts(key, response).prf();
}

double ConllF1(const Clustering &key, const Clustering &response) {
  return (Muc(key, response).f1 + BCubed(key, response).f1 +
          CeafPhi4(key, response).f1) /
         3.0;
}

void CorpusScorer::Add(const Clustering &key, const Clustering &response) {
  muc_ += MucCounts(key, response);
  b_cubed_ += BCubedCounts(key, response);
  ceaf_ += CeafPhi4Counts(key, response);
}

ConllScore CorpusScorer::Score() const {
  ConllScore score;
  score.muc = muc_.prf();
  score.b_cubed = b_cubed_.prf();
  score.ceaf_phi4 = ceaf_.prf();
  score.conll_f1 = (score.muc.f1 + score.b_cubed.f1 + score.ceaf_phi4.f1) / 3.0;
  return score;
}

ConllScore ScoreCorpus(const Corpus &key, const Corpus &response,
                       bool filter_singletons) {
  std::map<std::string, const Document *> responses;
  for (const Document &doc : response.documents) {
    responses.emplace(doc.doc_id, &doc);
  }
  CorpusScorer scorer;
  for (const Document &gold : key.documents) {
    const Clustering key_clusters =
        ToClustering(filter_singletons ? FilterSingletons(gold) : gold);
    auto it = responses.find(gold.doc_id);
    const Clustering response_clusters =
        it == responses.end() ? Clustering{} : ToClustering(*it->second);
    scorer.Add(key_clusters, response_clusters);
  }
  return scorer.Score();
}

}  // namespace corefkit
