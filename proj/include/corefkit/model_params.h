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

#ifndef COREFKIT_MODEL_PARAMS_H_
#define COREFKIT_MODEL_PARAMS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace corefkit {

// Architecture and training hyperparameters of the span-ranking model.
struct ModelConfig {
  // Hash buckets of the token embedding table.
  int vocab_buckets = 4096;
  int embed_dim = 16;
  int hidden_dim = 32;
  int width_dim = 8;
  int distance_dim = 8;
  int max_span_width = 10;
  // Fraction of T kept after mention scoring; 1 or more disables pruning.
  double prune_ratio = 0.4;
  // Antecedents considered per kept span, nearest first.
  int max_antecedents = 50;
  double lr_encoder = 1e-5;
  double lr_task = 2e-4;
  uint64_t hash_seed = 0;

  int span_dim() const { return 3 * embed_dim + width_dim; }
  int pair_dim() const { return 2 * span_dim() + distance_dim; }

  // Throws CorefError "bad-config" when a dimension or ratio is invalid.
  void Check() const;

  bool operator==(const ModelConfig &) const = default;
};

// Width buckets {1, 2, 3, 4, 5-7, 8+}.
inline constexpr int kWidthBuckets = 6;
// Distance buckets {1, 2, 3, 4, 5-7, 8-15, 16-31, 32-63, 64+}.
inline constexpr int kDistanceBuckets = 9;

// The encoder group is the stand-in for the pretrained encoder and gets its
// own learning rate; everything on top of it is the task group.
enum class ParamGroup { kEncoder, kTask };

enum class TensorId {
  kEmbedding,          // vocab_buckets x embed_dim
  kContextProj,        // embed_dim x embed_dim
  kContextBias,        // embed_dim x 1
  kWidthEmbedding,     // kWidthBuckets x width_dim
  kDistanceEmbedding,  // kDistanceBuckets x distance_dim
  kMentionHiddenW,     // hidden_dim x span_dim
  kMentionHiddenB,     // hidden_dim x 1
  kMentionOutW,        // 1 x hidden_dim
  kMentionOutB,        // 1 x 1
  kAntecedentHiddenW,  // hidden_dim x pair_dim
  kAntecedentHiddenB,  // hidden_dim x 1
  kAntecedentOutW,     // 1 x hidden_dim
  kAntecedentOutB,     // 1 x 1
};
inline constexpr int kNumTensors = 13;

struct Tensor {
  std::string name;
  ParamGroup group = ParamGroup::kTask;
  Eigen::MatrixXd value;
  Eigen::MatrixXd grad;
};

class ModelParams {
 public:
  ModelParams() = default;

  // All tensors zero.
  static ModelParams Zeros(const ModelConfig &config);
  // Embeddings uniform in +-0.1, weights Glorot-uniform, biases zero.
  static ModelParams Random(const ModelConfig &config, uint64_t seed);

  const ModelConfig &config() const { return config_; }
  uint64_t init_seed() const { return init_seed_; }

  Tensor &operator[](TensorId id) { return tensors_[static_cast<int>(id)]; }
  const Tensor &operator[](TensorId id) const {
    return tensors_[static_cast<int>(id)];
  }
  std::vector<Tensor> &tensors() { return tensors_; }
  const std::vector<Tensor> &tensors() const { return tensors_; }

  void ZeroGrad();
  bool AllFinite() const;
  size_t NumScalars() const;

  // Values, names, groups, config and seed all equal.
  bool SameValues(const ModelParams &other) const;
  // Largest absolute difference between corresponding values.
  double MaxAbsDiff(const ModelParams &other) const;

 private:
  ModelParams(const ModelConfig &config, uint64_t seed);

  ModelConfig config_;
  uint64_t init_seed_ = 0;
  std::vector<Tensor> tensors_;
};

std::string_view TensorName(TensorId id);

}  // namespace corefkit

#endif  // COREFKIT_MODEL_PARAMS_H_
