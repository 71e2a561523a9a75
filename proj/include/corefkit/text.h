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
#ifndef COREFKIT_TEXT_H_
#define COREFKIT_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corefkit {

// Lowercases UTF-8 text. Covers ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic capitals; everything else (and malformed bytes) passes through.
std::string Lowercase(std::string_view text);

// Seeded 64-bit FNV-1a hash with a final avalanche step.
uint64_t HashString(std::string_view text, uint64_t seed);

// Fixed-point rendering with round-half-up (away from zero) applied to the
// shortest decimal representation of value, so 58.8835 -> "58.884" at three
// decimals even though the binary double lies slightly below the half.
std::string FormatFixed(double value, int decimals);

std::vector<std::string> SplitString(std::string_view text, char separator);
std::string_view Trim(std::string_view text);

}  // namespace corefkit

#endif  // COREFKIT_TEXT_H_
