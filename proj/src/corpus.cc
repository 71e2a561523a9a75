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
#include "corefkit/corpus.h"

#include <algorithm>
#include <map>
#include <set>

namespace corefkit {

Span Mention::extent() const {
  if (parts.empty()) return {};
  return {parts.front().start, parts.back().end};
}

std::optional<std::string> Sentence::sent_id() const {
  static constexpr std::string_view kPrefix = "# sent_id = ";
  for (const std::string &line : comments) {
    if (line.starts_with(kPrefix)) return line.substr(kPrefix.size());
  }
  return std::nullopt;
}

int Document::num_mentions() const {
  int count = 0;
  for (const Cluster &cluster : clusters) count += cluster.mentions.size();
  return count;
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

int WordCount(const Document &doc, bool count_empty) {
  if (count_empty) return static_cast<int>(doc.tokens.size());
  int count = 0;
  for (const Token &token : doc.tokens) {
    if (!token.is_empty) ++count;
  }
  return count;
}

namespace {

std::string DescribeMention(const Cluster &cluster, size_t index) {
  std::string text = "cluster " + cluster.id + " mention " +
                     std::to_string(index) + " [";
  const Mention &mention = cluster.mentions[index];
  for (size_t i = 0; i < mention.parts.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(mention.parts[i].start) + "-" +
            std::to_string(mention.parts[i].end);
  }
  return text + "]";
}

}  // namespace

std::vector<Violation> Validate(const Document &doc) {
  std::vector<Violation> out;
  const int num_tokens = static_cast<int>(doc.tokens.size());

  for (int i = 0; i < num_tokens; ++i) {
    if (doc.tokens[i].index != i) {
      out.push_back({"token-index", "token " + std::to_string(i) +
                                        " has index " +
                                        std::to_string(doc.tokens[i].index)});
    }
  }

  // Sentences must tile the token list in order.
  int next = 0;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    if (sentence.first_token != next || sentence.num_tokens < 0) {
      out.push_back({"sentence-index", "sentence " + std::to_string(s) +
                                           " starts at token " +
                                           std::to_string(sentence.first_token)});
    }
    next = sentence.first_token + std::max(sentence.num_tokens, 0);
    for (int t = sentence.first_token; t < next && t < num_tokens; ++t) {
      if (t >= 0 && doc.tokens[t].sentence_index != static_cast<int>(s)) {
        out.push_back({"sentence-index",
                       "token " + std::to_string(t) + " claims sentence " +
                           std::to_string(doc.tokens[t].sentence_index)});
      }
    }
  }
  if (!doc.sentences.empty() && next != num_tokens) {
    out.push_back({"sentence-index", "sentences cover " + std::to_string(next) +
                                         " of " + std::to_string(num_tokens) +
                                         " tokens"});
  }

  std::set<std::string> ids;
  std::map<std::vector<Span>, std::string> seen;
  for (const Cluster &cluster : doc.clusters) {
    if (!ids.insert(cluster.id).second) {
      out.push_back({"duplicate-cluster-id", "cluster " + cluster.id});
    }
    if (cluster.mentions.empty()) {
      out.push_back({"empty-cluster", "cluster " + cluster.id});
    }
    for (size_t m = 0; m < cluster.mentions.size(); ++m) {
      const Mention &mention = cluster.mentions[m];
      const std::string where = DescribeMention(cluster, m);
      if (mention.cluster_id != cluster.id) {
        out.push_back({"cluster-id-mismatch",
                       where + " claims cluster " + mention.cluster_id});
      }
      if (mention.parts.empty()) {
        out.push_back({"empty-mention", where});
        continue;
      }
      bool bounded = true;
      for (size_t p = 0; p < mention.parts.size(); ++p) {
        const Span &part = mention.parts[p];
        if (part.start >= part.end) out.push_back({"empty-span", where});
        if (part.start < 0 || part.end > num_tokens) bounded = false;
        if (p > 0 && part.start < mention.parts[p - 1].end) {
          out.push_back({"unsorted-parts", where});
        }
      }
      if (!bounded) out.push_back({"span-out-of-bounds", where});
      auto [it, inserted] = seen.emplace(mention.parts, cluster.id);
      if (!inserted) {
        out.push_back({"duplicate-mention",
                       where + " also in cluster " + it->second});
      }
    }
  }
  return out;
}

std::vector<Violation> Validate(const Corpus &corpus) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (const Document &doc : corpus.documents) {
    if (!ids.insert(doc.doc_id).second) {
      out.push_back({"duplicate-doc-id", "document " + doc.doc_id});
    }
    for (Violation &v : Validate(doc)) {
      v.detail = doc.doc_id + ": " + v.detail;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace corefkit
