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
#include "corefkit/conllu.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "corefkit/error.h"
#include "corefkit/text.h"

namespace corefkit {

namespace {

constexpr std::string_view kEntityKey = "Entity=";
constexpr std::string_view kNewdoc = "# newdoc";

bool IsIdChar(char c) {
  return c != '(' && c != ')' && c != '[' && c != ']' && c != '|' &&
         c != '=' && c != '-' && c != '\t' && c != ' ' && c != '\n' &&
         c != '\r';
}

int ParseInt(std::string_view text, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CorefError("malformed-line",
                     "expected integer, got '" + std::string(text) + "'", line);
  }
  return value;
}

// A completed bracket pair: one part of a mention.
struct Bracket {
  std::string cluster_id;
  Span span;
  int part = 0;
  int of = 0;
  int line = 0;
  int order = 0;
};

struct OpenBracket {
  int start = 0;
  int part = 0;
  int of = 0;
  int line = 0;
};

// Replays per-token bracket events and assembles clusters. lines[t] is the
// input line of token t, used for error reporting.
std::vector<Cluster> DecodeEvents(
    const std::vector<std::vector<EntityEvent>> &events,
    const std::vector<int> &lines) {
  std::map<std::string, std::vector<OpenBracket>> open;
  std::vector<Bracket> done;
  for (size_t t = 0; t < events.size(); ++t) {
    const int token = static_cast<int>(t);
    for (const EntityEvent &event : events[t]) {
      if (event.kind == EntityEvent::Kind::kOpen) {
        open[event.cluster_id].push_back(
            {token, event.part, event.of, lines[t]});
      } else if (event.kind == EntityEvent::Kind::kSingle) {
        done.push_back({event.cluster_id, {token, token + 1}, event.part,
                        event.of, lines[t], static_cast<int>(done.size())});
      }
    }
    for (const EntityEvent &event : events[t]) {
      if (event.kind != EntityEvent::Kind::kClose) continue;
      auto it = open.find(event.cluster_id);
      if (it == open.end() || it->second.empty()) {
        throw CorefError("unbalanced-entity",
                         "closing " + event.cluster_id + " without opening",
                         lines[t]);
      }
      const OpenBracket start = it->second.back();
      it->second.pop_back();
      done.push_back({event.cluster_id, {start.start, token + 1}, start.part,
                      start.of, start.line, static_cast<int>(done.size())});
    }
  }
  for (const auto &[id, stack] : open) {
    if (!stack.empty()) {
      throw CorefError("unbalanced-entity", "mention of " + id + " never closed",
                       stack.back().line);
    }
  }

  std::stable_sort(done.begin(), done.end(),
                   [](const Bracket &a, const Bracket &b) {
                     if (a.span.start != b.span.start) {
                       return a.span.start < b.span.start;
                     }
                     return a.order < b.order;
                   });

  struct Pending {
    Mention mention;
    int of = 0;
    int line = 0;
  };
  std::vector<Pending> pending;
  std::map<std::string, Cluster> clusters;
  auto emit = [&clusters](Mention mention) {
    Cluster &cluster = clusters[mention.cluster_id];
    cluster.id = mention.cluster_id;
    cluster.mentions.push_back(std::move(mention));
  };
  for (const Bracket &bracket : done) {
    if (bracket.of == 0) {
      emit(Mention{{bracket.span}, bracket.cluster_id});
      continue;
    }
    if (bracket.part < 1 || bracket.part > bracket.of) {
      throw CorefError("bad-part-index",
                       bracket.cluster_id + "[" + std::to_string(bracket.part) +
                           "/" + std::to_string(bracket.of) + "]",
                       bracket.line);
    }
    if (bracket.part == 1) {
      pending.push_back(
          {Mention{{bracket.span}, bracket.cluster_id}, bracket.of, bracket.line});
    } else {
      auto it = std::find_if(pending.begin(), pending.end(),
                             [&bracket](const Pending &p) {
                               return p.mention.cluster_id ==
                                          bracket.cluster_id &&
                                      p.of == bracket.of &&
                                      static_cast<int>(p.mention.parts.size()) +
                                              1 ==
                                          bracket.part;
                             });
      if (it == pending.end()) {
        throw CorefError("bad-part-index",
                         "part " + std::to_string(bracket.part) + " of " +
                             bracket.cluster_id + " has no preceding part",
                         bracket.line);
      }
      it->mention.parts.push_back(bracket.span);
    }
    auto complete = std::find_if(pending.begin(), pending.end(),
                                 [](const Pending &p) {
                                   return static_cast<int>(
                                              p.mention.parts.size()) == p.of;
                                 });
    if (complete != pending.end()) {
      emit(std::move(complete->mention));
      pending.erase(complete);
    }
  }
  if (!pending.empty()) {
    throw CorefError("bad-part-index",
                     "discontinuous mention of " +
                         pending.front().mention.cluster_id +
                         " is missing parts",
                     pending.front().line);
  }

  std::vector<Cluster> out;
  for (auto &[id, cluster] : clusters) out.push_back(std::move(cluster));
  return out;
}

std::string FormatTokenId(const Token &token, int word_number,
                          int empty_number) {
  if (token.is_empty) {
    return std::to_string(word_number) + "." + std::to_string(empty_number);
  }
  return std::to_string(word_number);
}

std::vector<std::vector<EntityEvent>> EncodeEvents(const Document &doc) {
  struct Placed {
    EntityEvent event;
    Span span;
  };
  std::vector<std::vector<Placed>> closes(doc.tokens.size());
  std::vector<std::vector<Placed>> opens(doc.tokens.size());
  std::vector<std::vector<Placed>> singles(doc.tokens.size());
  for (const Cluster &cluster : doc.clusters) {
    if (cluster.id.empty() ||
        !std::all_of(cluster.id.begin(), cluster.id.end(), IsIdChar)) {
      throw CorefError("unserializable",
                       "cluster id '" + cluster.id + "' in " + doc.doc_id);
    }
    for (const Mention &mention : cluster.mentions) {
      const int n = mention.is_discontinuous()
                        ? static_cast<int>(mention.parts.size())
                        : 0;
      for (size_t k = 0; k < mention.parts.size(); ++k) {
        const Span &part = mention.parts[k];
        const int index = n > 0 ? static_cast<int>(k) + 1 : 0;
        if (part.start < 0 || part.end > static_cast<int>(doc.tokens.size()) ||
            part.start >= part.end) {
          throw CorefError("unserializable", "span out of bounds in " +
                                                 doc.doc_id);
        }
        if (part.width() == 1) {
          singles[part.start].push_back(
              {{EntityEvent::Kind::kSingle, cluster.id, index, n}, part});
        } else {
          opens[part.start].push_back(
              {{EntityEvent::Kind::kOpen, cluster.id, index, n}, part});
          closes[part.end - 1].push_back(
              {{EntityEvent::Kind::kClose, cluster.id, 0, 0}, part});
        }
      }
    }
  }
  std::vector<std::vector<EntityEvent>> events(doc.tokens.size());
  for (size_t t = 0; t < doc.tokens.size(); ++t) {
    // Innermost mention closes first; outermost opens first.
    std::stable_sort(closes[t].begin(), closes[t].end(),
                     [](const Placed &a, const Placed &b) {
                       return a.span.start > b.span.start;
                     });
    std::stable_sort(opens[t].begin(), opens[t].end(),
                     [](const Placed &a, const Placed &b) {
                       return a.span.end > b.span.end;
                     });
    for (auto *group : {&closes[t], &opens[t], &singles[t]}) {
      for (Placed &placed : *group) events[t].push_back(std::move(placed.event));
    }
  }
  return events;
}

bool SameClusters(std::vector<Cluster> a, std::vector<Cluster> b) {
  auto normalize = [](std::vector<Cluster> &clusters) {
    for (Cluster &c : clusters) {
      for (Mention &m : c.mentions) m.cluster_id.clear();
      std::sort(c.mentions.begin(), c.mentions.end(),
                [](const Mention &x, const Mention &y) {
                  return x.parts < y.parts;
                });
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster &x, const Cluster &y) { return x.id < y.id; });
  };
  normalize(a);
  normalize(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].id != b[i].id || a[i].mentions != b[i].mentions) return false;
  }
  return true;
}

std::string DefaultLanguage(const std::string &stem) {
  const size_t cut = stem.find_first_of("_-.");
  return cut == std::string::npos ? stem : stem.substr(0, cut);
}

}  // namespace

std::vector<EntityEvent> ParseEntityValue(std::string_view value, int line) {
  std::vector<EntityEvent> events;
  size_t i = 0;
  auto read_id = [&]() {
    const size_t begin = i;
    while (i < value.size() && IsIdChar(value[i])) ++i;
    if (i == begin) {
      throw CorefError("malformed-line",
                       "empty entity id in '" + std::string(value) + "'", line);
    }
    return std::string(value.substr(begin, i - begin));
  };
  while (i < value.size()) {
    EntityEvent event;
    if (value[i] == '(') {
      ++i;
      event.cluster_id = read_id();
      // CorefUD appends entity and mention attributes as "-type-head-...".
      while (i < value.size() && (value[i] == '-' || IsIdChar(value[i]))) ++i;
      if (i < value.size() && value[i] == '[') {
        const size_t close = value.find(']', i);
        const size_t slash = value.find('/', i);
        if (close == std::string_view::npos || slash == std::string_view::npos ||
            slash > close) {
          throw CorefError("malformed-line",
                           "bad part suffix in '" + std::string(value) + "'",
                           line);
        }
        event.part = ParseInt(value.substr(i + 1, slash - i - 1), line);
        event.of = ParseInt(value.substr(slash + 1, close - slash - 1), line);
        i = close + 1;
      }
      if (i < value.size() && value[i] == ')') {
        event.kind = EntityEvent::Kind::kSingle;
        ++i;
      } else {
        event.kind = EntityEvent::Kind::kOpen;
      }
    } else {
      event.kind = EntityEvent::Kind::kClose;
      event.cluster_id = read_id();
      if (i < value.size() && value[i] == '[') {
        const size_t close = value.find(']', i);
        if (close == std::string_view::npos) {
          throw CorefError("malformed-line",
                           "bad part suffix in '" + std::string(value) + "'",
                           line);
        }
        i = close + 1;
      }
      if (i >= value.size() || value[i] != ')') {
        throw CorefError("malformed-line",
                         "expected ')' in '" + std::string(value) + "'", line);
      }
      ++i;
    }
    events.push_back(std::move(event));
  }
  return events;
}

std::string FormatEntityEvents(const std::vector<EntityEvent> &events) {
  std::string out;
  for (const EntityEvent &event : events) {
    std::string suffix;
    if (event.of > 0) {
      suffix = "[" + std::to_string(event.part) + "/" +
               std::to_string(event.of) + "]";
    }
    switch (event.kind) {
      case EntityEvent::Kind::kOpen:
        out += "(" + event.cluster_id + suffix;
        break;
      case EntityEvent::Kind::kClose:
        out += event.cluster_id + ")";
        break;
      case EntityEvent::Kind::kSingle:
        out += "(" + event.cluster_id + suffix + ")";
        break;
    }
  }
  return out;
}

void CanonicalizeClusters(Document *doc) {
  for (Cluster &cluster : doc->clusters) {
    std::sort(cluster.mentions.begin(), cluster.mentions.end(),
              [](const Mention &a, const Mention &b) {
                return a.parts < b.parts;
              });
  }
  std::sort(doc->clusters.begin(), doc->clusters.end(),
            [](const Cluster &a, const Cluster &b) {
              if (a.mentions.empty() || b.mentions.empty()) {
                return a.mentions.size() > b.mentions.size() ||
                       (a.mentions.size() == b.mentions.size() && a.id < b.id);
              }
              if (a.mentions.front().parts != b.mentions.front().parts) {
                return a.mentions.front().parts < b.mentions.front().parts;
              }
              return a.id < b.id;
            });
}

Corpus ParseConllu(std::string_view text, const ParseOptions &options) {
  Corpus corpus;
  corpus.name = options.corpus_name;
  corpus.language = options.language;
  corpus.split = options.split;

  std::optional<Document> doc;
  std::vector<std::vector<EntityEvent>> events;
  std::vector<int> event_lines;
  Sentence sentence;
  bool in_sentence = false;
  int line_number = 0;

  auto finish_sentence = [&]() {
    if (!in_sentence) return;
    if (!doc) {
      doc.emplace();
      doc->doc_id = "doc" + std::to_string(corpus.documents.size() + 1);
      doc->language = options.language;
    }
    if (sentence.num_tokens > 0 || !sentence.comments.empty()) {
      doc->sentences.push_back(std::move(sentence));
    }
    sentence = Sentence();
    in_sentence = false;
  };
  auto finish_document = [&]() {
    finish_sentence();
    if (!doc) return;
    if (!doc->tokens.empty()) {
      doc->clusters = DecodeEvents(events, event_lines);
      CanonicalizeClusters(&*doc);
      corpus.documents.push_back(std::move(*doc));
    }
    doc.reset();
    events.clear();
    event_lines.clear();
  };

  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      finish_sentence();
      continue;
    }
    if (line.front() == '#') {
      if (line.starts_with(kNewdoc)) {
        finish_document();
        doc.emplace();
        doc->language = options.language;
        const size_t eq = line.find('=');
        if (eq != std::string_view::npos) {
          doc->doc_id = std::string(Trim(line.substr(eq + 1)));
        }
        if (doc->doc_id.empty()) {
          doc->doc_id = "doc" + std::to_string(corpus.documents.size() + 1);
        }
        in_sentence = true;
        sentence.first_token = 0;
        continue;
      }
      if (!in_sentence) {
        in_sentence = true;
      }
      sentence.comments.emplace_back(line);
      continue;
    }

    if (!in_sentence || !doc) {
      // First token line of a sentence without comments.
      if (!doc) {
        doc.emplace();
        doc->doc_id = "doc" + std::to_string(corpus.documents.size() + 1);
        doc->language = options.language;
      }
      in_sentence = true;
    }
    if (sentence.num_tokens == 0 && sentence.multiword_lines.empty()) {
      sentence.first_token = static_cast<int>(doc->tokens.size());
    }

    const std::vector<std::string> columns = SplitString(line, '\t');
    if (columns.size() != 10) {
      throw CorefError("malformed-line",
                       "expected 10 columns, found " +
                           std::to_string(columns.size()),
                       line_number);
    }
    const std::string &id = columns[0];
    if (id.find('-') != std::string::npos) {
      sentence.multiword_lines.emplace_back(sentence.num_tokens,
                                            std::string(line));
      continue;
    }

    Token token;
    token.index = static_cast<int>(doc->tokens.size());
    token.form = columns[1];
    token.sentence_index = static_cast<int>(doc->sentences.size());
    token.is_empty = id.find('.') != std::string::npos;
    token.ud.lemma = columns[2];
    token.ud.upos = columns[3];
    token.ud.xpos = columns[4];
    token.ud.feats = columns[5];
    token.ud.head = columns[6];
    token.ud.deprel = columns[7];
    token.ud.deps = columns[8];

    std::vector<EntityEvent> token_events;
    std::string misc_rest;
    if (columns[9] != "_") {
      for (const std::string &item : SplitString(columns[9], '|')) {
        if (std::string_view(item).starts_with(kEntityKey)) {
          token_events = ParseEntityValue(
              std::string_view(item).substr(kEntityKey.size()), line_number);
        } else {
          if (!misc_rest.empty()) misc_rest += "|";
          misc_rest += item;
        }
      }
    }
    token.ud.misc = misc_rest.empty() ? "_" : misc_rest;

    doc->tokens.push_back(std::move(token));
    events.push_back(std::move(token_events));
    event_lines.push_back(line_number);
    ++sentence.num_tokens;
  }
  finish_document();
  return corpus;
}

std::string SerializeConllu(const Corpus &corpus) {
  std::ostringstream out;
  for (const Document &doc : corpus.documents) {
    const std::vector<std::vector<EntityEvent>> events = EncodeEvents(doc);
    // Replay check: decoding the events must give back the clusters.
    try {
      const std::vector<int> lines(doc.tokens.size(), 0);
      if (!SameClusters(DecodeEvents(events, lines), doc.clusters)) {
        throw CorefError("unserializable",
                         "mentions of " + doc.doc_id +
                             " cannot be expressed as bracket events");
      }
    } catch (const CorefError &e) {
      if (e.code() == "unserializable") throw;
      throw CorefError("unserializable", doc.doc_id + ": " + e.what());
    }

    for (size_t s = 0; s < doc.sentences.size(); ++s) {
      const Sentence &sentence = doc.sentences[s];
      if (s == 0) out << "# newdoc id = " << doc.doc_id << "\n";
      for (const std::string &comment : sentence.comments) {
        out << comment << "\n";
      }
      int word_number = 0;
      int empty_number = 0;
      size_t multiword = 0;
      for (int k = 0; k < sentence.num_tokens; ++k) {
        while (multiword < sentence.multiword_lines.size() &&
               sentence.multiword_lines[multiword].first == k) {
          out << sentence.multiword_lines[multiword].second << "\n";
          ++multiword;
        }
        const int t = sentence.first_token + k;
        const Token &token = doc.tokens[t];
        if (token.is_empty) {
          ++empty_number;
        } else {
          ++word_number;
          empty_number = 0;
        }
        std::string misc = token.ud.misc == "_" ? "" : token.ud.misc;
        if (!events[t].empty()) {
          if (!misc.empty()) misc += "|";
          misc += std::string(kEntityKey) + FormatEntityEvents(events[t]);
        }
        if (misc.empty()) misc = "_";
        out << FormatTokenId(token, word_number, empty_number) << '\t'
            << token.form << '\t' << token.ud.lemma << '\t' << token.ud.upos
            << '\t' << token.ud.xpos << '\t' << token.ud.feats << '\t'
            << token.ud.head << '\t' << token.ud.deprel << '\t'
            << token.ud.deps << '\t' << misc << "\n";
      }
      for (; multiword < sentence.multiword_lines.size(); ++multiword) {
        out << sentence.multiword_lines[multiword].second << "\n";
      }
      out << "\n";
    }
  }
  return out.str();
}

Corpus ReadConlluFile(const std::string &path, ParseOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorefError("io-error", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string stem = std::filesystem::path(path).stem().string();
  if (options.corpus_name.empty()) options.corpus_name = stem;
  if (options.language.empty()) options.language = DefaultLanguage(stem);
  return ParseConllu(buffer.str(), options);
}

void WriteConlluFile(const std::string &path, const Corpus &corpus) {
  const std::string text = SerializeConllu(corpus);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorefError("io-error", "cannot write " + path);
  out << text;
}

}  // namespace corefkit
