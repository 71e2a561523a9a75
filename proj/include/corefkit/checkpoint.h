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

// Text checkpoints. Doubles are written as hexadecimal floating point, so
// LoadCheckpoint(SaveCheckpoint(p)) reproduces every value bit for bit.
//
//   corefkit-checkpoint 1
//   init_seed 7
//   vocab_buckets 4096
//   ...                              one line per ModelConfig field
//   tensor embedding encoder 4096 16
//   <row 0 values> ...               one line per row
//   end

#ifndef COREFKIT_CHECKPOINT_H_
#define COREFKIT_CHECKPOINT_H_

#include <string>

#include "corefkit/model_params.h"

namespace corefkit {

std::string SaveCheckpoint(const ModelParams &params);
// Throws CorefError "bad-checkpoint".
ModelParams LoadCheckpoint(const std::string &text);

void SaveCheckpointFile(const std::string &path, const ModelParams &params);
ModelParams LoadCheckpointFile(const std::string &path);

}  // namespace corefkit

#endif  // COREFKIT_CHECKPOINT_H_
