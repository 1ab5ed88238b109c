// Copyright 2026 The Artin Retractions Authors
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


#include <random>

#include <doctest.h>

#include "artin/error.hpp"
#include "artin/word.hpp"
#include "oracles.hpp"

using artin::Word;

namespace {

Word w(const char* text) { return artin::parse_word(text); }

}  // namespace

TEST_CASE("pi_word") {
  CHECK(artin::pi_word("a", "b", 3) == w("a b a"));
  CHECK(artin::pi_word("a", "b", 0).empty());
  CHECK(artin::pi_word("a", "a", 4) == w("a^4"));
  CHECK(artin::pi_word("a", "a", 4).syllable_length() == 1);
  CHECK(artin::pi_word("b", "a", 4) == w("b a b a"));
  CHECK_THROWS_AS(artin::pi_word("a", "b", -1), artin::InvalidArgument);
}

TEST_CASE("free reduction") {
  CHECK(artin::free_reduce(Word({{"a", 1}, {"b", 1}, {"b", -1}, {"a", 1}})) == w("a^2"));
  CHECK(artin::free_reduce(Word()).empty());
  CHECK(artin::free_reduce(Word({{"a", 1}, {"a", -1}})).empty());
  CHECK(artin::free_reduce(Word({{"a", 2}, {"b", 1}, {"a", 0}, {"b", -1}, {"a", -2}})).empty());
}

TEST_CASE("concat, invert, conjugate") {
  CHECK(artin::concat(w("a"), w("a^-1")).empty());
  CHECK(artin::invert(w("a b")) == w("b^-1 a^-1"));
  CHECK(artin::conjugate(w("b"), w("a")) == w("a b a^-1"));
  CHECK(artin::power(w("a b"), -2) == w("b^-1 a^-1 b^-1 a^-1"));
  CHECK(artin::power(w("a b"), 0).empty());
}

TEST_CASE("abelianization") {
  CHECK(artin::abelianize(w("a b a"), artin::Grading::TotalSum).total() == 3);
  const auto per = artin::abelianize(w("a b^-1"), artin::Grading::PerGenerator);
  CHECK(per.at("a") == 1);
  CHECK(per.at("b") == -1);
  for (int k = 0; k <= 6; ++k) {
    const auto img = artin::abelianize(artin::pi_word("b1", "b2", 2 * k), artin::Grading::PerGenerator);
    CHECK(img.at("b1") == k);
    CHECK(img.at("b2") == k);
  }
}

TEST_CASE("word grammar") {
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK(w("  a^-3  b ") == Word({{"a", -3}, {"b", 1}}));
  CHECK(artin::format_word(w("a^-3 b")) == "a^-3 b");
  CHECK(artin::format_word(Word()) == "1");
  CHECK_THROWS_AS(w("a^"), artin::ParseError);
  CHECK_THROWS_AS(w("a^x"), artin::ParseError);
  CHECK_THROWS_AS(w("^2"), artin::ParseError);
  try {
    w("a b ^3");
    FAIL("expected a parse error");
  } catch (const artin::ParseError& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("free reduction is idempotent and never lengthens") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Word x = oracle::random_word(rng, {"a", "b", "c"}, oracle::uniform(rng, 0, 16), 2);
    const Word r = artin::free_reduce(x);
    CHECK(artin::free_reduce(r) == r);
    CHECK(r.length() <= x.length());
  }
}

TEST_CASE("abelianization is a homomorphism") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const Word u = oracle::random_word(rng, {"a", "b", "c"}, oracle::uniform(rng, 0, 10), 3);
    const Word v = oracle::random_word(rng, {"a", "b", "c"}, oracle::uniform(rng, 0, 10), 3);
    for (auto g : {artin::Grading::TotalSum, artin::Grading::PerGenerator})
      CHECK(artin::abelianize(artin::concat(u, v), g) ==
            artin::abelianize(u, g) + artin::abelianize(v, g));
  }
}

TEST_CASE("alternating words have equal total degree") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t m = oracle::uniform(rng, 0, 50);
    const Word rel = artin::concat(artin::pi_word("a", "b", m), artin::invert(artin::pi_word("b", "a", m)));
    CHECK(artin::abelianize(rel, artin::Grading::TotalSum).total() == 0);
  }
}
