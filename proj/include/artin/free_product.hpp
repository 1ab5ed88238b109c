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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace artin::fp {

/// Order of a cyclic free factor: n >= 2, or 0 for infinite.
struct FactorOrder {
  std::int64_t n = 0;

  static FactorOrder infinite() { return {0}; }
  static FactorOrder finite(std::int64_t n);
  bool is_infinite() const { return n == 0; }
  std::string to_string() const;

  friend bool operator==(FactorOrder, FactorOrder) = default;
};

/// H * K with H, K cyclic; factor 1 is H, factor 2 is K.
struct Signature {
  FactorOrder order1;
  FactorOrder order2;

  FactorOrder order(int factor) const { return factor == 1 ? order1 : order2; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Syllable {
  int factor;  // 1 or 2
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Normal form in H * K: alternating factors, nonzero exponents, exponents of
/// finite-order factors reduced into {1, ..., order-1}. Only normalize() and
/// the group operations below build one.
class FpWord {
 public:
  explicit FpWord(Signature sig) : sig_(sig) {}

  const Signature& signature() const { return sig_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t syllable_length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  friend bool operator==(const FpWord&, const FpWord&) = default;

 private:
  friend FpWord normalize(const std::vector<Syllable>&, Signature);
  Signature sig_;
  std::vector<Syllable> syllables_;
};

/// Canonical alternating form of an arbitrary syllable list.
FpWord normalize(const std::vector<Syllable>& raw, Signature sig);

FpWord multiply(const FpWord& u, const FpWord& v);
FpWord inverse(const FpWord& w);
FpWord power(const FpWord& w, std::int64_t n);

struct CyclicReduction {
  FpWord core;
  FpWord conjugator;
};

/// w = conjugator · core · conjugator⁻¹ with core cyclically reduced (first and
/// last syllables in different factors, or at most one syllable).
CyclicReduction cyclic_reduce(const FpWord& w);

/// Vertex v(gF) of the Bass–Serre tree, F = factor. `rep` is the shortest coset
/// representative: the normal form of g with any trailing F-syllable removed.
struct Vertex {
  int factor;
  FpWord rep;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

Vertex make_vertex(const FpWord& g, int factor);
/// Base vertex v(F).
Vertex base_vertex(Signature sig, int factor);
/// g · v
Vertex act(const FpWord& g, const Vertex& v);
/// Tree distance d_T(v, w).
std::int64_t distance(const Vertex& v, const Vertex& w);

struct Elliptic {
  Vertex fixed_vertex;
};

struct Hyperbolic {
  std::int64_t translation_length;
  /// Four consecutive vertices of the axis: c·v(H), c·v(K) and their images
  /// under the element.
  std::vector<Vertex> axis_sample;
};

using TreeAction = std::variant<Elliptic, Hyperbolic>;

/// Elliptic when the cyclic core has at most one syllable; otherwise hyperbolic
/// with translation length equal to the core's syllable length.
TreeAction classify_action(const FpWord& w);

std::int64_t translation_length(const TreeAction& action);

/// Brute force: min over vertices x within `radius` of v(H) of d_T(x, w·x).
/// Infinite factors are explored with exponents |e| <= max(1, max |exponent of
/// w|). Exact for radius >= syllable_length(w) + 2.
std::int64_t tree_distance_oracle(const FpWord& w, int radius);

/// Text grammar for free-product words: tokens `x^k` (factor 1) and `y^k`
/// (factor 2), whitespace separated; "1" is the identity.
FpWord parse_fp_word(std::string_view text, Signature sig);
std::string format_fp_word(const FpWord& w);
/// "2,3" / "inf,4"
Signature parse_signature(std::string_view text);

}  // namespace artin::fp
