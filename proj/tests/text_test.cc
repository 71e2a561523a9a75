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

#include "corefkit/text.h"

#include "doctest.h"

using namespace corefkit;

TEST_CASE("lowercasing covers ASCII, Latin, Greek and Cyrillic") {
  CHECK(Lowercase("Anna SAW Boris") == "anna saw boris");
  CHECK(Lowercase("ŽLUŤOUČKÝ Kůň") == "žluťoučký kůň");
  CHECK(Lowercase("ÀÉÎÕÜ") == "àéîõü");
  CHECK(Lowercase("ΑΘΗΝΑ") == "αθηνα");
  CHECK(Lowercase("МОСКВА Ёж") == "москва ёж");
  CHECK(Lowercase("ŁÓDŹ") == "łódź");
  CHECK(Lowercase("123 .,;") == "123 .,;");
}

TEST_CASE("hashing depends on text and seed") {
  CHECK(HashString("anna", 0) == HashString("anna", 0));
  CHECK(HashString("anna", 0) != HashString("anne", 0));
  CHECK(HashString("anna", 0) != HashString("anna", 1));
  CHECK(HashString("", 0) != HashString("", 1));
}

TEST_CASE("fixed formatting rounds half away from zero on the decimal value") {
  CHECK(FormatFixed(58.8834, 3) == "58.883");
  CHECK(FormatFixed(58.8835, 3) == "58.884");
  CHECK(FormatFixed(0.0005, 3) == "0.001");
  CHECK(FormatFixed(-0.0005, 3) == "-0.001");
  CHECK(FormatFixed(-0.0004, 3) == "0.000");
  CHECK(FormatFixed(66.66666666666667, 3) == "66.667");
  CHECK(FormatFixed(2.5, 0) == "3");
  CHECK(FormatFixed(0.05, 1) == "0.1");
  CHECK(FormatFixed(99.95, 1) == "100.0");
  CHECK(FormatFixed(1e-12, 3) == "0.000");
  CHECK(FormatFixed(12, 2) == "12.00");
}

TEST_CASE("splitting and trimming") {
  CHECK(SplitString("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(SplitString("", ',') == std::vector<std::string>{""});
  CHECK(Trim("  x y \t") == "x y");
  CHECK(Trim("   ").empty());
}
