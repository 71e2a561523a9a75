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
#include "corefkit/corpus_ops.h"

#include <cmath>

#include "corefkit/error.h"
#include "corefkit/random.h"
#include "corefkit/text.h"

namespace corefkit {

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  Shuffle(&order, &rng);
  return order;
}

CorpusStats ComputeStats(const Corpus &corpus) {
  CorpusStats stats;
  int singletons = 0;
  int discontinuous = 0;
  for (const Document &doc : corpus.documents) {
    ++stats.docs;
    stats.sents += static_cast<int>(doc.sentences.size());
    for (const Token &token : doc.tokens) {
      if (token.is_empty) {
        ++stats.empty;
      } else {
        ++stats.words;
      }
    }
    for (const Cluster &cluster : doc.clusters) {
      ++stats.clusters;
      if (cluster.is_singleton()) ++singletons;
      for (const Mention &mention : cluster.mentions) {
        ++stats.mentions;
        if (mention.is_discontinuous()) ++discontinuous;
      }
    }
  }
  if (stats.clusters > 0) {
    stats.singleton_pct = 100.0 * singletons / stats.clusters;
  }
  if (stats.mentions > 0) {
    stats.discont_pct = 100.0 * discontinuous / stats.mentions;
  }
  return stats;
}

std::string FormatPercent(double value) {
  return FormatFixed(value, 1);
}

std::pair<Corpus, Corpus> SplitTrainDev(const Corpus &corpus,
                                        double dev_fraction, uint64_t seed) {
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0)) {
    throw CorefError("bad-fraction", "dev fraction must lie in (0, 1)");
  }
  const size_t n = corpus.documents.size();
  const auto dev_size =
      static_cast<size_t>(std::llround(dev_fraction * static_cast<double>(n)));
  if (dev_size == 0 || dev_size >= n) {
    throw CorefError("too-few-docs",
                     std::to_string(n) + " documents cannot be split with "
                     "fraction " + std::to_string(dev_fraction));
  }
  const std::vector<size_t> order = SeededPermutation(n, seed);
  std::vector<bool> in_dev(n, false);
  for (size_t i = 0; i < dev_size; ++i) in_dev[order[i]] = true;

  Corpus train{corpus.name, corpus.language, {}, corpus.split};
  Corpus dev{corpus.name, corpus.language, {}, Split::kDev};
  for (size_t i = 0; i < n; ++i) {
    (in_dev[i] ? dev : train).documents.push_back(corpus.documents[i]);
  }
  return {std::move(train), std::move(dev)};
}

Document FilterSingletons(const Document &doc) {
  Document out = doc;
  std::erase_if(out.clusters,
                [](const Cluster &c) { return c.mentions.size() == 1; });
  return out;
}

Document DropDiscontinuous(const Document &doc) {
  Document out = doc;
  for (Cluster &cluster : out.clusters) {
    std::erase_if(cluster.mentions,
                  [](const Mention &m) { return m.is_discontinuous(); });
  }
  std::erase_if(out.clusters,
                [](const Cluster &c) { return c.mentions.empty(); });
  return out;
}

namespace {

template <typename Fn>
Corpus MapDocuments(const Corpus &corpus, Fn fn) {
  Corpus out{corpus.name, corpus.language, {}, corpus.split};
  out.documents.reserve(corpus.documents.size());
  for (const Document &doc : corpus.documents) {
    out.documents.push_back(fn(doc));
  }
  return out;
}

}  // namespace

Corpus FilterSingletons(const Corpus &corpus) {
  return MapDocuments(corpus,
                      [](const Document &d) { return FilterSingletons(d); });
}

Corpus DropDiscontinuous(const Corpus &corpus) {
  return MapDocuments(corpus,
                      [](const Document &d) { return DropDiscontinuous(d); });
}

Corpus MergeCorpora(const std::vector<Corpus> &corpora) {
  Corpus out;
  out.language = "multi";
  if (corpora.empty()) return out;
  out.split = corpora.front().split;
  for (const Corpus &corpus : corpora) {
    if (corpus.split != out.split) {
      throw CorefError("split-mismatch",
                       corpus.name + " is " +
                           std::string(SplitName(corpus.split)) + ", expected " +
                           std::string(SplitName(out.split)));
    }
    if (!out.name.empty()) out.name += "+";
    out.name += corpus.name;
    for (const Document &doc : corpus.documents) {
      Document copy = doc;
      copy.doc_id = corpus.name + "/" + doc.doc_id;
      if (copy.language.empty()) copy.language = corpus.language;
      out.documents.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace corefkit
