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
#include "corefkit/error.h"

namespace corefkit {

namespace {

std::string Describe(const std::string &code, const std::string &message,
                     int line) {
  std::string text = code;
  if (line > 0) text += " (line " + std::to_string(line) + ")";
  if (!message.empty()) text += ": " + message;
  return text;
}

}  // namespace

CorefError::CorefError(std::string code, const std::string &message, int line)
    : std::runtime_error(Describe(code, message, line)),
      code_(std::move(code)),
      line_(line) {}

}  // namespace corefkit
