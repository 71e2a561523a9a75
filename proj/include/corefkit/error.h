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
#ifndef COREFKIT_ERROR_H_
#define COREFKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace corefkit {

// Error raised by every corefkit operation. The code is a short stable
// identifier such as "malformed-line" or "split-mismatch"; line is the 1-based
// input line for parse errors and 0 otherwise.
class CorefError : public std::runtime_error {
 public:
  CorefError(std::string code, const std::string &message, int line = 0);

  const std::string &code() const { return code_; }
  int line() const { return line_; }

 private:
  std::string code_;
  int line_;
};

}  // namespace corefkit

#endif  // COREFKIT_ERROR_H_
