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
// In-memory model of coreference-annotated documents. Coreference is stored
// cluster-based: every mention belongs to exactly one cluster, identified by a
// document-unique id. Token indices are document-global and spans are
// half-open.

#ifndef COREFKIT_CORPUS_H_
#define COREFKIT_CORPUS_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corefkit {

// Half-open token interval [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int width() const { return end - start; }
  bool contains(int token) const { return token >= start && token < end; }

  auto operator<=>(const Span &) const = default;
};

// CoNLL-U columns that are carried through ingestion but not modeled.
struct UdFields {
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  std::string head = "_";
  std::string deprel = "_";
  std::string deps = "_";
  // MISC column with the Entity key removed ("_" when nothing else is left).
  std::string misc = "_";

  bool operator==(const UdFields &) const = default;
};

struct Token {
  int index = 0;
  std::string form;
  int sentence_index = 0;
  // Empty (reconstructed) node, written with a decimal ID such as "3.1".
  bool is_empty = false;
  UdFields ud;
};

struct Mention {
  // Sorted by start, pairwise disjoint, at least one part.
  std::vector<Span> parts;
  std::string cluster_id;

  bool is_discontinuous() const { return parts.size() > 1; }
  // Smallest span covering all parts.
  Span extent() const;

  bool operator==(const Mention &) const = default;
};

struct Cluster {
  std::string id;
  std::vector<Mention> mentions;

  bool is_singleton() const { return mentions.size() == 1; }
};

struct Sentence {
  // Verbatim comment lines (including the leading '#'), except "# newdoc".
  std::vector<std::string> comments;
  int first_token = 0;
  int num_tokens = 0;
  // Multiword token range lines ("4-5 ...") keyed by the sentence-local
  // offset of the token they precede.
  std::vector<std::pair<int, std::string>> multiword_lines;

  // Value of the "# sent_id = ..." comment, if any.
  std::optional<std::string> sent_id() const;
};

struct Document {
  std::string doc_id;
  std::string language;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  std::vector<Cluster> clusters;

  int num_mentions() const;
};

enum class Split { kTrain, kDev, kTest };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct Corpus {
  std::string name;
  // Language code, or "multi" for joined corpora.
  std::string language;
  std::vector<Document> documents;
  Split split = Split::kTrain;
};

// Number of words T in the document. Empty nodes are part of the token
// stream and are counted unless count_empty is false.
int WordCount(const Document &doc, bool count_empty = true);

struct Violation {
  // One of: token-index, sentence-index, empty-cluster, duplicate-cluster-id,
  // cluster-id-mismatch, empty-mention, empty-span, unsorted-parts,
  // span-out-of-bounds, duplicate-mention, duplicate-doc-id.
  std::string kind;
  std::string detail;
};

// Checks the structural invariants of a document. An empty result means the
// document is well formed.
std::vector<Violation> Validate(const Document &doc);
std::vector<Violation> Validate(const Corpus &corpus);

}  // namespace corefkit

#endif  // COREFKIT_CORPUS_H_
