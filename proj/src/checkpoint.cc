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

#include "corefkit/checkpoint.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "corefkit/error.h"

namespace corefkit {

namespace {

constexpr std::string_view kMagic = "corefkit-checkpoint";
constexpr int kVersion = 1;

std::string HexDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::hex);
  return std::string(buffer, end);
}

double ParseHexDouble(const std::string &text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value, std::chars_format::hex);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CorefError("bad-checkpoint", "bad value '" + text + "'");
  }
  return value;
}

class Reader {
 public:
  explicit Reader(const std::string &text) : in_(text) {}

  std::string Word() {
    std::string word;
    if (!(in_ >> word)) throw CorefError("bad-checkpoint", "truncated");
    return word;
  }
  void Expect(std::string_view word) {
    const std::string got = Word();
    if (got != word) {
      throw CorefError("bad-checkpoint",
                       "expected '" + std::string(word) + "', got '" + got + "'");
    }
  }
  int64_t Int() {
    const std::string word = Word();
    int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw CorefError("bad-checkpoint", "bad integer '" + word + "'");
    }
    return value;
  }
  uint64_t Uint() {
    const std::string word = Word();
    uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw CorefError("bad-checkpoint", "bad integer '" + word + "'");
    }
    return value;
  }
  double Double() { return ParseHexDouble(Word()); }

 private:
  std::istringstream in_;
};

}  // namespace

std::string SaveCheckpoint(const ModelParams &params) {
  const ModelConfig &c = params.config();
  std::ostringstream out;
  out << kMagic << " " << kVersion << "\n";
  out << "init_seed " << params.init_seed() << "\n";
  out << "vocab_buckets " << c.vocab_buckets << "\n";
  out << "embed_dim " << c.embed_dim << "\n";
  out << "hidden_dim " << c.hidden_dim << "\n";
  out << "width_dim " << c.width_dim << "\n";
  out << "distance_dim " << c.distance_dim << "\n";
  out << "max_span_width " << c.max_span_width << "\n";
  out << "prune_ratio " << HexDouble(c.prune_ratio) << "\n";
  out << "max_antecedents " << c.max_antecedents << "\n";
  out << "lr_encoder " << HexDouble(c.lr_encoder) << "\n";
  out << "lr_task " << HexDouble(c.lr_task) << "\n";
  out << "hash_seed " << c.hash_seed << "\n";
  for (const Tensor &t : params.tensors()) {
    out << "tensor " << t.name << " "
        << (t.group == ParamGroup::kEncoder ? "encoder" : "task") << " "
        << t.value.rows() << " " << t.value.cols() << "\n";
    for (Eigen::Index r = 0; r < t.value.rows(); ++r) {
      for (Eigen::Index col = 0; col < t.value.cols(); ++col) {
        if (col > 0) out << ' ';
        out << HexDouble(t.value(r, col));
      }
      out << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

ModelParams LoadCheckpoint(const std::string &text) {
  Reader in(text);
  in.Expect(kMagic);
  if (in.Int() != kVersion) {
    throw CorefError("bad-checkpoint", "unsupported version");
  }
  in.Expect("init_seed");
  const uint64_t seed = in.Uint();
  ModelConfig c;
  in.Expect("vocab_buckets");
  c.vocab_buckets = static_cast<int>(in.Int());
  in.Expect("embed_dim");
  c.embed_dim = static_cast<int>(in.Int());
  in.Expect("hidden_dim");
  c.hidden_dim = static_cast<int>(in.Int());
  in.Expect("width_dim");
  c.width_dim = static_cast<int>(in.Int());
  in.Expect("distance_dim");
  c.distance_dim = static_cast<int>(in.Int());
  in.Expect("max_span_width");
  c.max_span_width = static_cast<int>(in.Int());
  in.Expect("prune_ratio");
  c.prune_ratio = in.Double();
  in.Expect("max_antecedents");
  c.max_antecedents = static_cast<int>(in.Int());
  in.Expect("lr_encoder");
  c.lr_encoder = in.Double();
  in.Expect("lr_task");
  c.lr_task = in.Double();
  in.Expect("hash_seed");
  c.hash_seed = in.Uint();
  try {
    c.Check();
  } catch (const CorefError &e) {
    throw CorefError("bad-checkpoint", e.what());
  }

  // Random() with the stored seed only fixes shapes; every value is
  // overwritten below.
  ModelParams params = ModelParams::Random(c, seed);
  for (Tensor &t : params.tensors()) {
    in.Expect("tensor");
    in.Expect(t.name);
    in.Expect(t.group == ParamGroup::kEncoder ? "encoder" : "task");
    if (in.Int() != t.value.rows() || in.Int() != t.value.cols()) {
      throw CorefError("bad-checkpoint", "shape mismatch for " + t.name);
    }
    for (Eigen::Index r = 0; r < t.value.rows(); ++r) {
      for (Eigen::Index col = 0; col < t.value.cols(); ++col) {
        t.value(r, col) = in.Double();
      }
    }
  }
  in.Expect("end");
  return params;
}

void SaveCheckpointFile(const std::string &path, const ModelParams &params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorefError("io-error", "cannot write " + path);
  out << SaveCheckpoint(params);
}

ModelParams LoadCheckpointFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorefError("io-error", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadCheckpoint(buffer.str());
}

}  // namespace corefkit
