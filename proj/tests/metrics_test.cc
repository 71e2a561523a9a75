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

#include <algorithm>

#include "corefkit/conllu.h"
#include "corefkit/random.h"
#include "doctest.h"
#include "oracles.h"

using namespace corefkit;

namespace {

MentionKey M(int token) { return {Span{token, token + 1}}; }

Clustering C(std::vector<std::vector<int>> clusters) {
  Clustering out;
  for (const auto &cluster : clusters) {
    std::vector<MentionKey> mentions;
    for (int token : cluster) mentions.push_back(M(token));
    out.clusters.push_back(mentions);
  }
  return out;
}

void CheckClose(const PRF &got, const oracle::Prf &want) {
  CHECK(got.precision == doctest::Approx(want.precision).epsilon(1e-12));
  CHECK(got.recall == doctest::Approx(want.recall).epsilon(1e-12));
  CHECK(got.f1 == doctest::Approx(want.f1).epsilon(1e-12));
}

}  // namespace

TEST_CASE("split cluster against a single key cluster") {
  const Clustering key = C({{0, 1, 2}});
  const Clustering response = C({{0, 1}, {2}});
  CHECK(Muc(key, response).recall == doctest::Approx(0.5));
  CHECK(Muc(key, response).precision == doctest::Approx(1.0));
  CHECK(Muc(key, response).f1 == doctest::Approx(2.0 / 3.0));
  CHECK(BCubed(key, response).recall == doctest::Approx(5.0 / 9.0));
  CHECK(BCubed(key, response).precision == doctest::Approx(1.0));
  CHECK(BCubed(key, response).f1 == doctest::Approx(5.0 / 7.0));
  CHECK(CeafPhi4(key, response).recall == doctest::Approx(0.8));
  CHECK(CeafPhi4(key, response).precision == doctest::Approx(0.4));
  CHECK(CeafPhi4(key, response).f1 == doctest::Approx(8.0 / 15.0));
  CHECK(ConllF1(key, response) ==
        doctest::Approx((2.0 / 3.0 + 5.0 / 7.0 + 8.0 / 15.0) / 3.0));
}

TEST_CASE("identical clusterings score one") {
  const Clustering key = C({{0, 3}, {1, 2, 4}});
  CHECK(Muc(key, key).f1 == doctest::Approx(1.0));
  CHECK(BCubed(key, key).f1 == doctest::Approx(1.0));
  CHECK(CeafPhi4(key, key).f1 == doctest::Approx(1.0));
}

TEST_CASE("empty response scores zero everywhere") {
  const Clustering key = C({{0, 1}, {2, 3, 4}});
  const Clustering empty;
  for (const PRF &prf :
       {Muc(key, empty), BCubed(key, empty), CeafPhi4(key, empty)}) {
    CHECK(prf.precision == 0.0);
    CHECK(prf.recall == 0.0);
    CHECK(prf.f1 == 0.0);
  }
  CHECK(ConllF1(empty, empty) == 0.0);
}

TEST_CASE("singleton clusters add no MUC links") {
  const Clustering key = C({{0}, {1}});
  const Clustering response = C({{0}, {1}});
  CHECK(Muc(key, response).f1 == 0.0);
  CHECK(BCubed(key, response).f1 == doctest::Approx(1.0));
}

TEST_CASE("twinless response mentions lower precision only") {
  const Clustering key = C({{0, 1}});
  const Clustering response = C({{0, 1, 5}});
  const PRF b3 = BCubed(key, response);
  CHECK(b3.recall == doctest::Approx(1.0));
  CHECK(b3.precision == doctest::Approx((2.0 / 3 + 2.0 / 3 + 0.0) / 3));
}

TEST_CASE("phi4 of overlapping clusters") {
  CHECK(Phi4({M(0), M(1)}, {M(1), M(2), M(3)}) == doctest::Approx(0.4));
  CHECK(Phi4({M(0)}, {M(1)}) == 0.0);
}

TEST_CASE("metrics agree with brute-force definitions") {
  Rng rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.Index(8));
    const Clustering key = oracle::RandomClustering(n, 0.2, &rng);
    const Clustering response = oracle::RandomClustering(n, 0.2, &rng);
    CheckClose(Muc(key, response), oracle::Muc(key, response));
    CheckClose(BCubed(key, response), oracle::BCubed(key, response));
    CheckClose(CeafPhi4(key, response), oracle::CeafPhi4(key, response));
  }
}

TEST_CASE("swapping key and response swaps precision and recall") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Clustering a = oracle::RandomClustering(7, 0.2, &rng);
    const Clustering b = oracle::RandomClustering(7, 0.2, &rng);
    for (auto metric : {&Muc, &BCubed, &CeafPhi4}) {
      const PRF ab = metric(a, b);
      const PRF ba = metric(b, a);
      CHECK(ab.precision == doctest::Approx(ba.recall).epsilon(1e-12));
      CHECK(ab.recall == doctest::Approx(ba.precision).epsilon(1e-12));
    }
  }
}

TEST_CASE("scores do not depend on cluster or mention order") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Clustering key = oracle::RandomClustering(8, 0.1, &rng);
    const Clustering response = oracle::RandomClustering(8, 0.1, &rng);
    Clustering shuffled = response;
    Shuffle(&shuffled.clusters, &rng);
    for (auto &cluster : shuffled.clusters) Shuffle(&cluster, &rng);
    CHECK(ConllF1(key, response) ==
          doctest::Approx(ConllF1(key, shuffled)).epsilon(1e-12));
  }
}

TEST_CASE("corpus score sums counts before dividing") {
  const Clustering key1 = C({{0, 1, 2}});
  const Clustering resp1 = C({{0, 1}, {2}});
  const Clustering key2 = C({{0, 1}});
  const Clustering resp2 = C({{0, 1}});
  CorpusScorer scorer;
  scorer.Add(key1, resp1);
  scorer.Add(key2, resp2);
  const ConllScore score = scorer.Score();
  // MUC recall: (1 + 1) / (2 + 1).
  CHECK(score.muc.recall == doctest::Approx(2.0 / 3.0));
  CHECK(score.muc.precision == doctest::Approx(1.0));
  // B-cubed recall: (5/3 + 2) / 5.
  CHECK(score.b_cubed.recall == doctest::Approx((5.0 / 3.0 + 2.0) / 5.0));
  CHECK(score.conll_f1 ==
        doctest::Approx((score.muc.f1 + score.b_cubed.f1 + score.ceaf_phi4.f1) /
                        3.0));
}

TEST_CASE("mentions match only on identical parts") {
  Clustering key;
  key.clusters = {{{Span{0, 2}}, {Span{4, 5}}}};
  Clustering response;
  response.clusters = {{{Span{0, 1}}, {Span{4, 5}}}};
  CHECK(Muc(key, response).f1 == 0.0);
  Clustering discontinuous;
  discontinuous.clusters = {{{Span{0, 1}, Span{3, 4}}, {Span{4, 5}}}};
  CHECK(Muc(discontinuous, discontinuous).f1 == doctest::Approx(1.0));
  CHECK(Muc(discontinuous, key).f1 == 0.0);
}

TEST_CASE("ScoreCorpus matches documents by id and filters key singletons") {
  const std::string key_text =
      "# newdoc id = a\n"
      "1\tAnna\t_\t_\t_\t_\t_\t_\t_\tEntity=(e1)\n"
      "2\tsaw\t_\t_\t_\t_\t_\t_\t_\tEntity=(e2)\n"
      "3\therself\t_\t_\t_\t_\t_\t_\t_\tEntity=(e1)\n\n"
      "# newdoc id = b\n"
      "1\tBoris\t_\t_\t_\t_\t_\t_\t_\tEntity=(e1)\n"
      "2\tran\t_\t_\t_\t_\t_\t_\t_\tEntity=(e1)\n\n";
  const std::string response_text =
      "# newdoc id = a\n"
      "1\tAnna\t_\t_\t_\t_\t_\t_\t_\tEntity=(c1)\n"
      "2\tsaw\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "3\therself\t_\t_\t_\t_\t_\t_\t_\tEntity=(c1)\n\n";
  const Corpus key = ParseConllu(key_text);
  const Corpus response = ParseConllu(response_text);
  const ConllScore filtered = ScoreCorpus(key, response, true);
  // Document b is missing from the response, so half of the links are found.
  CHECK(filtered.muc.recall == doctest::Approx(0.5));
  CHECK(filtered.muc.precision == doctest::Approx(1.0));
  CHECK(filtered.b_cubed.recall == doctest::Approx(0.5));
  const ConllScore unfiltered = ScoreCorpus(key, response, false);
  CHECK(unfiltered.b_cubed.recall == doctest::Approx(2.0 / 5.0));
}
