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
#ifndef COREFKIT_RANDOM_H_
#define COREFKIT_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace corefkit {

// Seeded generator whose derived draws use only the raw mt19937_64 output
// and are identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform index in [0, n); n > 0.
  size_t Index(size_t n) { return static_cast<size_t>(engine_() % n); }
  // Uniform real in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform real in [-scale, scale).
  double Symmetric(double scale) { return (2.0 * Unit() - 1.0) * scale; }

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates shuffle: for i = n-1 down to 1, swap position i with
// position Next() % (i + 1).
template <typename T>
void Shuffle(std::vector<T> *items, Rng *rng) {
  for (size_t i = items->size(); i > 1; --i) {
    std::swap((*items)[i - 1], (*items)[rng->Index(i)]);
  }
}

// Permutation of 0..n-1 produced by Shuffle with a fresh Rng(seed).
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

}  // namespace corefkit

#endif  // COREFKIT_RANDOM_H_
