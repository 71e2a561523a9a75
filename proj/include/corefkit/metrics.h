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

// Coreference evaluation metrics with the semantics of the CoNLL reference
// scorer: MUC, B-cubed and entity-based CEAF with the phi4 similarity. Mentions
// match only when their parts are identical. Undefined ratios are 0.

#ifndef COREFKIT_METRICS_H_
#define COREFKIT_METRICS_H_

#include <vector>

#include "corefkit/corpus.h"

namespace corefkit {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// f1 = 2PR / (P + R), or 0 when P + R = 0.
PRF MakePRF(double precision, double recall);

// A mention is identified by its full list of parts.
using MentionKey = std::vector<Span>;

struct Clustering {
  std::vector<std::vector<MentionKey>> clusters;
};

Clustering ToClustering(const Document &doc);

// Numerators and denominators of a metric. Summing counts over documents and
// dividing once gives the corpus-level (micro-averaged) score.
struct MetricCounts {
  double recall_num = 0.0;
  double recall_den = 0.0;
  double precision_num = 0.0;
  double precision_den = 0.0;

  MetricCounts &operator+=(const MetricCounts &other);
  PRF prf() const;
};

MetricCounts MucCounts(const Clustering &key, const Clustering &response);
MetricCounts BCubedCounts(const Clustering &key, const Clustering &response);
MetricCounts CeafPhi4Counts(const Clustering &key, const Clustering &response);

PRF Muc(const Clustering &key, const Clustering &response);
PRF BCubed(const Clustering &key, const Clustering &response);
PRF CeafPhi4(const Clustering &key, const Clustering &response);

// phi4(K, R) = 2 |K n R| / (|K| + |R|).
double Phi4(const std::vector<MentionKey> &key,
            const std::vector<MentionKey> &response);

// Mean of the MUC, B-cubed and CEAF-phi4 F1 scores.
double ConllF1(const Clustering &key, const Clustering &response);

struct ConllScore {
  PRF muc;
  PRF b_cubed;
  PRF ceaf_phi4;
  double conll_f1 = 0.0;
};

// Accumulates per-document counts for a corpus-level score.
class CorpusScorer {
 public:
  void Add(const Clustering &key, const Clustering &response);
  ConllScore Score() const;

 private:
  MetricCounts muc_;
  MetricCounts b_cubed_;
  MetricCounts ceaf_;
};

// Scores a response corpus against a key corpus, matching documents by id.
// Key documents without a response count as empty responses. With
// filter_singletons, singleton clusters are removed from the key first.
ConllScore ScoreCorpus(const Corpus &key, const Corpus &response,
                       bool filter_singletons = false);

}  // namespace corefkit

#endif  // COREFKIT_METRICS_H_
