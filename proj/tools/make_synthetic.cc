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

// Generates the bundled synthetic corpora: a small single-language corpus
// with lexically signaled coreference, and a three-language benchmark.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corefkit/conllu.h"
#include "corefkit/corpus.h"
#include "corefkit/random.h"

namespace fs = std::filesystem;
using namespace corefkit;

namespace {

const std::vector<std::vector<std::string>> kNames = {
    {"Anna"}, {"Boris"}, {"Clara"}, {"David"}, {"Green", "Valley"},
    {"Old", "Mill"}};

const std::vector<std::vector<std::string>> kObjects = {
    {"lamp"}, {"window"}, {"letter"}, {"bridge"}, {"garden"}};

struct Lexicon {
  std::string language;
  std::vector<std::string> verbs;
  std::vector<std::string> preps;
  std::string article;
  std::vector<std::string> nouns;
  std::string with;
};

const std::vector<Lexicon> kLexicons = {
    {"en", {"met", "saw", "called", "helped", "visited"}, {"near", "after", "behind"},
     "the", {"river", "station", "market", "church"}, "with"},
    {"xa", {"meta", "vida", "chama", "ajuda", "visita"}, {"perto", "apos", "atras"},
     "la", {"rio", "estacao", "mercado", "igreja"}, "com"},
    {"xb", {"traf", "sah", "rief", "half", "besuchte"}, {"neben", "nach", "hinter"},
     "der", {"fluss", "bahnhof", "markt", "kirche"}, "mit"},
    {"xc", {"vstretil", "videl", "pozval", "pomog", "posetil"}, {"u", "posle", "za"},
     "tot", {"reka", "vokzal", "rynok", "tserkov"}, "s"},
};

class DocumentBuilder {
 public:
  DocumentBuilder(std::string doc_id, std::string language) {
    doc_.doc_id = std::move(doc_id);
    doc_.language = std::move(language);
  }

  void StartSentence() {
    Sentence sentence;
    sentence.first_token = static_cast<int>(doc_.tokens.size());
    doc_.sentences.push_back(sentence);
  }

  void Word(const std::string &form) {
    Token token;
    token.index = static_cast<int>(doc_.tokens.size());
    token.form = form;
    token.sentence_index = static_cast<int>(doc_.sentences.size()) - 1;
    doc_.tokens.push_back(token);
    doc_.sentences.back().num_tokens++;
  }

  // Appends a mention of the given words to cluster `id`.
  void Mention(const std::vector<std::string> &words, const std::string &id) {
    const int start = static_cast<int>(doc_.tokens.size());
    for (const std::string &w : words) Word(w);
    const int end = static_cast<int>(doc_.tokens.size());
    for (Cluster &c : doc_.clusters) {
      if (c.id == id) {
        c.mentions.push_back({{{start, end}}, id});
        return;
      }
    }
    doc_.clusters.push_back({id, {{{{start, end}}, id}}});
  }

  Document Finish() {
    int n = 0;
    for (Sentence &s : doc_.sentences) {
      std::string text;
      for (int t = s.first_token; t < s.first_token + s.num_tokens; ++t) {
        if (!text.empty()) text += " ";
        text += doc_.tokens[t].form;
      }
      s.comments = {"# sent_id = " + doc_.doc_id + "-" + std::to_string(++n),
                    "# text = " + text};
    }
    CanonicalizeClusters(&doc_);
    return doc_;
  }

 private:
  Document doc_;
};

// Picks the names of each document so that, across a corpus, every pair of
// names shares a document as early as possible.
class NamePicker {
 public:
  explicit NamePicker(Rng *rng)
      : rng_(rng), seen_(kNames.size(), std::vector<int>(kNames.size(), 0)) {}

  std::vector<size_t> Draw(size_t count) {
    std::vector<std::vector<size_t>> best;
    int best_score = -1;
    std::vector<size_t> choice(count);
    Enumerate(0, 0, &choice, &best, &best_score);
    std::vector<size_t> names = best[rng_->Index(best.size())];
    for (size_t i = 0; i < names.size(); ++i) {
      for (size_t j = i + 1; j < names.size(); ++j) {
        seen_[names[i]][names[j]]++;
        seen_[names[j]][names[i]]++;
      }
    }
    Shuffle(&names, rng_);
    return names;
  }

 private:
  void Enumerate(size_t pos, size_t from, std::vector<size_t> *choice,
                 std::vector<std::vector<size_t>> *best, int *best_score) {
    if (pos == choice->size()) {
      int score = 0;
      for (size_t i = 0; i < choice->size(); ++i) {
        for (size_t j = i + 1; j < choice->size(); ++j) {
          score += seen_[(*choice)[i]][(*choice)[j]] == 0 ? 1 : 0;
        }
      }
      if (score > *best_score) {
        *best_score = score;
        best->clear();
      }
      if (score == *best_score) best->push_back(*choice);
      return;
    }
    for (size_t n = from; n < kNames.size(); ++n) {
      (*choice)[pos] = n;
      Enumerate(pos + 1, n + 1, choice, best, best_score);
    }
  }

  Rng *rng_;
  std::vector<std::vector<int>> seen_;
};

// Four sentences "X verb prep Y ." over two or three named entities, each
// mentioned at least twice. With `singletons`, one sentence becomes
// "X verb object prep Y ." where the object occurs only once.
Document MakeDocument(const std::string &doc_id, const Lexicon &lex,
                      bool singletons, NamePicker *picker, Rng *rng) {
  const size_t num_entities = 2 + rng->Index(2);
  const std::vector<size_t> names = picker->Draw(num_entities);
  std::vector<std::pair<size_t, size_t>> pairs;
  if (num_entities == 2) {
    pairs = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
  } else {
    pairs = {{0, 1}, {2, 0}, {1, 2}, {rng->Index(3), 0}};
    if (pairs[3].first == 0) pairs[3].second = 1 + rng->Index(2);
  }
  for (auto &[a, b] : pairs) {
    if (rng->Index(2) == 1) std::swap(a, b);
  }
  const size_t singleton_sentence = rng->Index(pairs.size());

  DocumentBuilder builder(doc_id, lex.language);
  for (size_t s = 0; s < pairs.size(); ++s) {
    const auto [a, b] = pairs[s];
    builder.StartSentence();
    builder.Mention(kNames[names[a]], "e" + std::to_string(a + 1));
    builder.Word(lex.verbs[rng->Index(lex.verbs.size())]);
    if (singletons && s == singleton_sentence) {
      builder.Mention(kObjects[rng->Index(kObjects.size())], "s1");
    }
    builder.Word(lex.preps[rng->Index(lex.preps.size())]);
    builder.Mention(kNames[names[b]], "e" + std::to_string(b + 1));
    builder.Word(".");
  }
  return builder.Finish();
}

Corpus MakeCorpus(const std::string &prefix, const Lexicon &lex, int docs,
                  bool singletons, Split split, uint64_t seed) {
  Rng rng(seed);
  NamePicker picker(&rng);
  Corpus corpus{prefix, lex.language, {}, split};
  for (int i = 0; i < docs; ++i) {
    corpus.documents.push_back(
        MakeDocument(prefix + "-" + std::to_string(i + 1), lex, singletons, &picker, &rng));
  }
  return corpus;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generate the bundled synthetic corpora"};
  std::string out_dir = "data";
  app.add_option("--out", out_dir, "Output data directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const fs::path synthetic = fs::path(out_dir) / "synthetic";
  const fs::path bench = fs::path(out_dir) / "bench";
  fs::create_directories(synthetic);
  fs::create_directories(bench);

  WriteConlluFile((synthetic / "train.conllu").string(),
                  MakeCorpus("train", kLexicons[0], 10, false, Split::kTrain, 11));
  WriteConlluFile((synthetic / "dev.conllu").string(),
                  MakeCorpus("dev", kLexicons[0], 4, false, Split::kDev, 12));
  for (size_t i = 1; i < kLexicons.size(); ++i) {
    const Lexicon &lex = kLexicons[i];
    WriteConlluFile((bench / (lex.language + "_train.conllu")).string(),
                    MakeCorpus(lex.language + "-train", lex, 8, true,
                               Split::kTrain, 100 + i));
    WriteConlluFile((bench / (lex.language + "_test.conllu")).string(),
                    MakeCorpus(lex.language + "-test", lex, 4, true, Split::kTest,
                               200 + i));
  }
  std::cout << "wrote " << synthetic.string() << " and " << bench.string() << "\n";
  return 0;
}
