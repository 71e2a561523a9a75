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
// Corpus-level operations: statistics, train/dev splitting, test-set
// preprocessing and joining corpora of several languages.

#ifndef COREFKIT_CORPUS_OPS_H_
#define COREFKIT_CORPUS_OPS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corefkit/corpus.h"

namespace corefkit {

struct CorpusStats {
  int docs = 0;
  int sents = 0;
  // Regular words; empty nodes are counted separately.
  int words = 0;
  int empty = 0;
  int clusters = 0;
  int mentions = 0;
  // Percentage of clusters with one mention, at full precision.
  double singleton_pct = 0.0;
  // Percentage of mentions with more than one part.
  double discont_pct = 0.0;
};

CorpusStats ComputeStats(const Corpus &corpus);

// Percentage rounded half-up to one decimal, e.g. 66.66.. -> "66.7".
std::string FormatPercent(double value);

// Moves round(dev_fraction * docs) documents, chosen by a seeded shuffle, to
// a dev corpus. Both outputs keep the input's document order. Throws
// "bad-fraction" outside (0, 1) and "too-few-docs" when a side would be empty.
std::pair<Corpus, Corpus> SplitTrainDev(const Corpus &corpus,
                                        double dev_fraction, uint64_t seed);

Document FilterSingletons(const Document &doc);
Document DropDiscontinuous(const Document &doc);
Corpus FilterSingletons(const Corpus &corpus);
Corpus DropDiscontinuous(const Corpus &corpus);

// Concatenates corpora of one split. Document ids become "<name>/<id>" and the
// result's language is "multi"; documents keep their own language. Throws
// "split-mismatch".
Corpus MergeCorpora(const std::vector<Corpus> &corpora);

}  // namespace corefkit

#endif  // COREFKIT_CORPUS_OPS_H_
