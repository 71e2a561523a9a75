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
// CoNLL-U reader and writer for coreference annotation.
//
// Coreference lives in the MISC column under the Entity key. Its value is a
// concatenation of bracket events for the token:
//
//   (id        opens a mention of cluster id at this token
//   id)        closes the innermost open mention of cluster id after this token
//   (id)       one-token mention
//   (id[k/n]   part k of an n-part discontinuous mention (also "(id[k/n])")
//
// Ids end at the first '-'; anything after it in an opening event (CorefUD
// entity and mention attributes) is ignored, as is a "[k/n]" before a ')'
// in a closing event.
//
// Events on one token are applied opens first (left to right), then closes.
// The writer emits closes, then opens, then one-token mentions.

#ifndef COREFKIT_CONLLU_H_
#define COREFKIT_CONLLU_H_

#include <string>
#include <string_view>
#include <vector>

#include "corefkit/corpus.h"

namespace corefkit {

struct EntityEvent {
  enum class Kind { kOpen, kClose, kSingle };
  Kind kind = Kind::kOpen;
  std::string cluster_id;
  // Discontinuous part index k of n; both 0 for continuous mentions.
  int part = 0;
  int of = 0;

  bool operator==(const EntityEvent &) const = default;
};

// Parses the value of an Entity MISC item. Throws CorefError
// "malformed-line" on syntax errors.
std::vector<EntityEvent> ParseEntityValue(std::string_view value,
                                          int line = 0);
std::string FormatEntityEvents(const std::vector<EntityEvent> &events);

struct ParseOptions {
  std::string corpus_name;
  std::string language;
  Split split = Split::kTrain;
};

// Parses CoNLL-U text into a corpus, one document per "# newdoc" block.
// Errors (CorefError, with line number): malformed-line, unbalanced-entity,
// bad-part-index.
Corpus ParseConllu(std::string_view text, const ParseOptions &options = {});

// Writes a corpus as CoNLL-U. Token IDs are regenerated from the sentence
// structure. Throws "unserializable" when the bracket notation cannot express
// the document's mentions unambiguously.
std::string SerializeConllu(const Corpus &corpus);

// File helpers. When options leave name or language empty they are derived
// from the file name ("cs_train.conllu" -> name "cs_train", language "cs").
Corpus ReadConlluFile(const std::string &path, ParseOptions options = {});
void WriteConlluFile(const std::string &path, const Corpus &corpus);

// Sorts mentions inside clusters and clusters by their first mention, the
// order ParseConllu produces.
void CanonicalizeClusters(Document *doc);

}  // namespace corefkit

#endif  // COREFKIT_CONLLU_H_
