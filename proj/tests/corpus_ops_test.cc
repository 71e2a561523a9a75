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

#include <random>
#include <set>

#include "corefkit/conllu.h"
#include "corefkit/error.h"
#include "corefkit/random.h"
#include "corefkit/text.h"
#include "doctest.h"

using namespace corefkit;

namespace {

const std::string kFixtures = std::string(COREFKIT_DATA_DIR) + "/fixtures/";

Corpus NumberedCorpus(int docs, const std::string &name = "c") {
  Corpus corpus;
  corpus.name = name;
  corpus.language = name;
  for (int i = 0; i < docs; ++i) {
    Document doc;
    doc.doc_id = "doc" + std::to_string(i);
    corpus.documents.push_back(doc);
  }
  return corpus;
}

Document WithClusters(std::vector<std::vector<std::vector<Span>>> clusters) {
  Document doc;
  doc.doc_id = "d";
  int id = 0;
  for (auto &mentions : clusters) {
    Cluster cluster;
    cluster.id = "e" + std::to_string(++id);
    for (auto &parts : mentions) cluster.mentions.push_back({parts, cluster.id});
    doc.clusters.push_back(cluster);
  }
  return doc;
}

// Fisher-Yates over 0..n-1 driven by a fresh mt19937_64, independent of the
// library's generator wrapper.
std::vector<size_t> ReferenceShuffle(size_t n, uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  for (size_t i = n; i > 1; --i) {
    const size_t j = engine() % i;
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace

TEST_CASE("stats on fixtures match hand counts") {
  const CorpusStats nested = ComputeStats(ReadConlluFile(kFixtures + "nested.conllu"));
  CHECK(nested.docs == 2);
  CHECK(nested.sents == 3);
  CHECK(nested.words == 17);
  CHECK(nested.empty == 0);
  CHECK(nested.clusters == 5);
  CHECK(nested.mentions == 8);
  CHECK(FormatFixed(nested.singleton_pct, 3) == "40.000");

  const CorpusStats singleton =
      ComputeStats(ReadConlluFile(kFixtures + "singleton.conllu"));
  CHECK(singleton.clusters == 3);
  CHECK(FormatFixed(singleton.singleton_pct, 3) == "66.667");
  CHECK(FormatFixed(singleton.discont_pct, 3) == "0.000");

  const CorpusStats discont =
      ComputeStats(ReadConlluFile(kFixtures + "discontinuous.conllu"));
  CHECK(discont.mentions == 4);
  CHECK(FormatFixed(discont.discont_pct, 3) == "25.000");

  const CorpusStats empty = ComputeStats(ReadConlluFile(kFixtures + "empty_node.conllu"));
  CHECK(empty.words == 7);
  CHECK(empty.empty == 1);
}

TEST_CASE("stats of an empty corpus") {
  const CorpusStats stats = ComputeStats(Corpus{});
  CHECK(stats.docs == 0);
  CHECK(stats.singleton_pct == 0.0);
  CHECK(stats.discont_pct == 0.0);
  CHECK(FormatPercent(2.45) == "2.5");
}

TEST_CASE("train/dev split sizes, partition and determinism") {
  const Corpus corpus = NumberedCorpus(100);
  auto [train, dev] = SplitTrainDev(corpus, 0.1, 3);
  CHECK(train.documents.size() == 90);
  CHECK(dev.documents.size() == 10);
  CHECK(dev.split == Split::kDev);
  std::set<std::string> ids;
  for (const auto &doc : train.documents) ids.insert(doc.doc_id);
  for (const auto &doc : dev.documents) CHECK(ids.insert(doc.doc_id).second);
  CHECK(ids.size() == 100);
  auto [train2, dev2] = SplitTrainDev(corpus, 0.1, 3);
  for (size_t i = 0; i < dev.documents.size(); ++i) {
    CHECK(dev.documents[i].doc_id == dev2.documents[i].doc_id);
  }
}

TEST_CASE("dev documents are the first shuffled positions") {
  const Corpus corpus = NumberedCorpus(10);
  auto [train, dev] = SplitTrainDev(corpus, 0.1, 7);
  REQUIRE(dev.documents.size() == 1);
  CHECK(dev.documents[0].doc_id ==
        "doc" + std::to_string(ReferenceShuffle(10, 7)[0]));
  CHECK(SeededPermutation(10, 7) == ReferenceShuffle(10, 7));
}

TEST_CASE("split errors") {
  CHECK_THROWS_AS(SplitTrainDev(NumberedCorpus(10), 0.0, 1), CorefError);
  CHECK_THROWS_AS(SplitTrainDev(NumberedCorpus(10), 1.0, 1), CorefError);
  CHECK_THROWS_AS(SplitTrainDev(NumberedCorpus(3), 0.1, 1), CorefError);
  try {
    SplitTrainDev(NumberedCorpus(3), 0.1, 1);
  } catch (const CorefError &e) {
    CHECK(e.code() == "too-few-docs");
  }
}

TEST_CASE("singleton filtering") {
  const Document doc = WithClusters({{{{0, 1}}, {{2, 3}}, {{4, 5}}}, {{{6, 7}}}, {{{8, 9}}}});
  const Document filtered = FilterSingletons(doc);
  REQUIRE(filtered.clusters.size() == 1);
  CHECK(filtered.clusters[0].mentions.size() == 3);
  CHECK(FilterSingletons(filtered).clusters.size() == 1);
  CHECK(FilterSingletons(WithClusters({{{{0, 1}}}, {{{2, 3}}}})).clusters.empty());
}

TEST_CASE("dropping discontinuous mentions") {
  const Document doc =
      WithClusters({{{{0, 1}}, {{2, 3}, {4, 5}}}, {{{1, 2}, {6, 7}}, {{3, 4}, {8, 9}}}});
  const Document dropped = DropDiscontinuous(doc);
  REQUIRE(dropped.clusters.size() == 1);
  CHECK(dropped.clusters[0].mentions.size() == 1);
  CHECK(dropped.clusters[0].mentions[0].parts == std::vector<Span>{{0, 1}});
}

TEST_CASE("filtered fixtures report zero percentages") {
  for (const char *name : {"nested", "singleton", "discontinuous"}) {
    const Corpus corpus = ReadConlluFile(kFixtures + name + ".conllu");
    const CorpusStats stats = ComputeStats(FilterSingletons(DropDiscontinuous(corpus)));
    CHECK(stats.singleton_pct == 0.0);
    CHECK(stats.discont_pct == 0.0);
    CHECK(ComputeStats(FilterSingletons(corpus)).singleton_pct == 0.0);
    CHECK(ComputeStats(DropDiscontinuous(corpus)).discont_pct == 0.0);
  }
}

TEST_CASE("merging corpora") {
  Corpus cs = NumberedCorpus(2, "cs");
  Corpus ru = NumberedCorpus(3, "ru");
  cs.documents[0].clusters = {{"e1", {{{{0, 1}}, "e1"}}}};
  const Corpus merged = MergeCorpora({cs, ru});
  CHECK(merged.documents.size() == 5);
  CHECK(merged.language == "multi");
  CHECK(merged.documents[0].doc_id == "cs/doc0");
  CHECK(merged.documents[4].doc_id == "ru/doc2");
  CHECK(merged.documents[0].clusters.size() == 1);
  CHECK(MergeCorpora({cs}).documents[1].doc_id == "cs/doc1");
  Corpus dev = ru;
  dev.split = Split::kDev;
  try {
    MergeCorpora({cs, dev});
    FAIL("expected split-mismatch");
  } catch (const CorefError &e) {
    CHECK(e.code() == "split-mismatch");
  }
}
