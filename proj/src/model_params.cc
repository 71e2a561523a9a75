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

#include "corefkit/model_params.h"

#include <cmath>
#include <cstring>
#include <limits>

#include "corefkit/error.h"
#include "corefkit/random.h"

namespace corefkit {

namespace {

struct TensorSpec {
  std::string_view name;
  ParamGroup group;
};

constexpr std::array<TensorSpec, kNumTensors> kSpecs = {{
    {"embedding", ParamGroup::kEncoder},
    {"context_proj", ParamGroup::kEncoder},
    {"context_bias", ParamGroup::kEncoder},
    {"width_embedding", ParamGroup::kTask},
    {"distance_embedding", ParamGroup::kTask},
    {"mention_hidden_w", ParamGroup::kTask},
    {"mention_hidden_b", ParamGroup::kTask},
    {"mention_out_w", ParamGroup::kTask},
    {"mention_out_b", ParamGroup::kTask},
    {"antecedent_hidden_w", ParamGroup::kTask},
    {"antecedent_hidden_b", ParamGroup::kTask},
    {"antecedent_out_w", ParamGroup::kTask},
    {"antecedent_out_b", ParamGroup::kTask},
}};

std::array<std::pair<int, int>, kNumTensors> Shapes(const ModelConfig &c) {
  return {{
      {c.vocab_buckets, c.embed_dim},
      {c.embed_dim, c.embed_dim},
      {c.embed_dim, 1},
      {kWidthBuckets, c.width_dim},
      {kDistanceBuckets, c.distance_dim},
      {c.hidden_dim, c.span_dim()},
      {c.hidden_dim, 1},
      {1, c.hidden_dim},
      {1, 1},
      {c.hidden_dim, c.pair_dim()},
      {c.hidden_dim, 1},
      {1, c.hidden_dim},
      {1, 1},
  }};
}

}  // namespace

void ModelConfig::Check() const {
  auto require = [](bool ok, const char *what) {
    if (!ok) throw CorefError("bad-config", what);
  };
  require(vocab_buckets > 0, "vocab_buckets must be positive");
  require(embed_dim > 0, "embed_dim must be positive");
  require(hidden_dim > 0, "hidden_dim must be positive");
  require(width_dim > 0, "width_dim must be positive");
  require(distance_dim > 0, "distance_dim must be positive");
  require(max_span_width > 0, "max_span_width must be positive");
  require(prune_ratio > 0.0, "prune_ratio must be positive");
  require(max_antecedents > 0, "max_antecedents must be positive");
  require(lr_encoder >= 0.0 && lr_task >= 0.0, "learning rates must be >= 0");
}

std::string_view TensorName(TensorId id) {
  return kSpecs[static_cast<int>(id)].name;
}

ModelParams::ModelParams(const ModelConfig &config, uint64_t seed)
    : config_(config), init_seed_(seed) {
  config_.Check();
  const auto shapes = Shapes(config_);
  tensors_.resize(kNumTensors);
  for (int i = 0; i < kNumTensors; ++i) {
    Tensor &t = tensors_[i];
    t.name = std::string(kSpecs[i].name);
    t.group = kSpecs[i].group;
    t.value = Eigen::MatrixXd::Zero(shapes[i].first, shapes[i].second);
    t.grad = Eigen::MatrixXd::Zero(shapes[i].first, shapes[i].second);
  }
}

ModelParams ModelParams::Zeros(const ModelConfig &config) {
  return ModelParams(config, 0);
}

ModelParams ModelParams::Random(const ModelConfig &config, uint64_t seed) {
  ModelParams params(config, seed);
  Rng rng(seed);
  for (int i = 0; i < kNumTensors; ++i) {
    Tensor &t = params.tensors_[i];
    const auto id = static_cast<TensorId>(i);
    double scale = 0.0;
    switch (id) {
      case TensorId::kEmbedding:
      case TensorId::kWidthEmbedding:
      case TensorId::kDistanceEmbedding:
        scale = 0.1;
        break;
      case TensorId::kContextProj:
      case TensorId::kMentionHiddenW:
      case TensorId::kMentionOutW:
      case TensorId::kAntecedentHiddenW:
      case TensorId::kAntecedentOutW:
        scale = std::sqrt(6.0 / static_cast<double>(t.value.rows() +
                                                    t.value.cols()));
        break;
      default:
        break;
    }
    for (Eigen::Index r = 0; r < t.value.rows(); ++r) {
      for (Eigen::Index c = 0; c < t.value.cols(); ++c) {
        t.value(r, c) = scale > 0.0 ? rng.Symmetric(scale) : 0.0;
      }
    }
  }
  return params;
}

void ModelParams::ZeroGrad() {
  for (Tensor &t : tensors_) t.grad.setZero();
}

bool ModelParams::AllFinite() const {
  for (const Tensor &t : tensors_) {
    if (!t.value.allFinite()) return false;
  }
  return true;
}

size_t ModelParams::NumScalars() const {
  size_t total = 0;
  for (const Tensor &t : tensors_) total += t.value.size();
  return total;
}

bool ModelParams::SameValues(const ModelParams &other) const {
  if (!(config_ == other.config_) || init_seed_ != other.init_seed_ ||
      tensors_.size() != other.tensors_.size()) {
    return false;
  }
  for (size_t i = 0; i < tensors_.size(); ++i) {
    const Tensor &a = tensors_[i];
    const Tensor &b = other.tensors_[i];
    if (a.name != b.name || a.group != b.group ||
        a.value.rows() != b.value.rows() || a.value.cols() != b.value.cols()) {
      return false;
    }
    for (Eigen::Index k = 0; k < a.value.size(); ++k) {
      // Bitwise: -0.0 and NaN payloads differ.
      const double x = a.value.data()[k];
      const double y = b.value.data()[k];
      if (std::memcmp(&x, &y, sizeof(double)) != 0) return false;
    }
  }
  return true;
}

double ModelParams::MaxAbsDiff(const ModelParams &other) const {
  if (tensors_.size() != other.tensors_.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double diff = 0.0;
  for (size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].value.rows() != other.tensors_[i].value.rows() ||
        tensors_[i].value.cols() != other.tensors_[i].value.cols()) {
      return std::numeric_limits<double>::infinity();
    }
    diff = std::max(
        diff, (tensors_[i].value - other.tensors_[i].value).cwiseAbs().maxCoeff());
  }
  return diff;
}

}  // namespace corefkit
