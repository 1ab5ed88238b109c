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


#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

struct Syllable {
  GeneratorId generator;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word over named generators, stored syllable-compressed. Zero exponents are
/// dropped on construction; adjacent syllables on the same generator are only
/// merged by free_reduce (and by the group operations below, which reduce).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(GeneratorId g, std::int64_t exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_length() const { return syllables_.size(); }
  /// Letter length: sum of |exponent|.
  std::int64_t length() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Π(s, t, m): the alternating word s t s ... of length m. Throws
/// InvalidArgument for m < 0. For s == t the result collapses to s^m.
Word pi_word(const GeneratorId& s, const GeneratorId& t, std::int64_t m);

/// Alternating product of two arbitrary words: u v u v ... with m factors.
Word pi_product(const Word& u, const Word& v, std::int64_t m);

Word free_reduce(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
/// by · w · by⁻¹
Word conjugate(const Word& w, const Word& by);
/// w^n for any integer n.
Word power(const Word& w, std::int64_t n);

enum class Grading { TotalSum, PerGenerator };

/// Finitely supported map generator-class -> integer. For TotalSum the single
/// class is the empty string; zero coordinates are not stored.
struct AbelianImage {
  std::map<std::string, std::int64_t> coordinates;

  std::int64_t at(const std::string& key) const;
  /// TotalSum value (sum over all coordinates).
  std::int64_t total() const;

  AbelianImage& operator+=(const AbelianImage& other);
  friend AbelianImage operator+(AbelianImage a, const AbelianImage& b) { return a += b; }
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

/// Exponent sums. PerGenerator is a homomorphism on an Artin group only when
/// every finite label is even; the caller chooses the grading.
AbelianImage abelianize(const Word& w, Grading grading);

/// Text grammar: whitespace-separated tokens `g` or `g^k`, k a nonzero integer,
/// e.g. "a b^-1 a^3". A lone "1" (or an empty string) is the identity.
/// Throws ParseError naming the character offset of the bad token.
Word parse_word(std::string_view text);

/// Inverse of parse_word; the identity prints as "1".
std::string format_word(const Word& w);

}  // namespace artin
