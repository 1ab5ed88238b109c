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


// Reference implementations used as test oracles. They follow the textbook
// definitions directly and share no code with the library algorithms.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace oracle {

using artin::CoxeterMatrix;
using artin::Label;
using artin::Word;

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random word with `len` letters, exponents ±1 (or up to ±max_exp).
inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int len,
                        int max_exp = 1) {
  std::vector<artin::Syllable> out;
  for (int i = 0; i < len; ++i) {
    std::int64_t e = uniform(rng, 1, max_exp);
    if (uniform(rng, 0, 1)) e = -e;
    out.push_back({gens[uniform(rng, 0, gens.size() - 1)], e});
  }
  return Word(std::move(out));
}

/// Retract-compatible, straight from the definition: rank <= 1, or every label
/// odd and every triple has two equal labels that the third divides.
inline bool retract_compatible_by_definition(const CoxeterMatrix& m,
                                             const std::vector<std::size_t>& block) {
  if (block.size() <= 1) return true;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      if (!m.label(block[i], block[j]).is_odd()) return false;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      for (std::size_t k = j + 1; k < block.size(); ++k) {
        const std::uint32_t x = m.label(block[i], block[j]).value();
        const std::uint32_t y = m.label(block[i], block[k]).value();
        const std::uint32_t z = m.label(block[j], block[k]).value();
        const bool ok = (x == y && x % z == 0) || (x == z && x % y == 0) || (y == z && y % x == 0);
        if (!ok) return false;
      }
  return true;
}

/// Parabolic-retract-compatible by search over every set partition of S.
inline bool prc_by_definition(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<std::size_t> block_of(n, 0);
  // Restricted growth strings enumerate set partitions.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> blocks(used);
      for (std::size_t g = 0; g < n; ++g) blocks[block_of[g]].push_back(g);
      for (const auto& b : blocks)
        if (!retract_compatible_by_definition(m, b)) return false;
      for (std::size_t p = 0; p < used; ++p)
        for (std::size_t q = p + 1; q < used; ++q) {
          const Label first = m.label(blocks[p][0], blocks[q][0]);
          if (first.is_odd()) return false;
          for (auto a : blocks[p])
            for (auto b : blocks[q])
              if (m.label(a, b) != first) return false;
        }
      return true;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block_of[i] = b;
      if (rec(i + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  return n == 0 || rec(0, 0);
}

/// Image of a word in the dihedral group of order 2m acting on Z/m, with gen1
/// acting as i -> -i and gen2 as i -> 1 - i. Letters act right to left.
inline std::vector<int> dihedral_permutation(int m, const Word& w, const std::string& gen1) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const std::int64_t reps = ((it->exponent % 2) + 2) % 2;  // involutions
    for (std::int64_t r = 0; r < reps; ++r)
      for (auto& v : perm) v = it->generator == gen1 ? (m - v) % m : ((1 - v) % m + m) % m;
  }
  return perm;
}

/// Exponent sum of each generator.
inline std::vector<std::int64_t> exponent_sums(const Word& w, const std::vector<std::string>& gens) {
  std::vector<std::int64_t> out(gens.size(), 0);
  for (const auto& s : w.syllables())
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (s.generator == gens[i]) out[i] += s.exponent;
  return out;
}

/// Cheap invariants of A(m): the Coxeter quotient and the abelianization
/// (per generator for even m, total otherwise). Distinct invariants prove
/// distinct elements.
inline bool invariants_differ(int m, const Word& u, const Word& v) {
  if (dihedral_permutation(m, u, "a") != dihedral_permutation(m, v, "a")) return true;
  const auto su = exponent_sums(u, {"a", "b"});
  const auto sv = exponent_sums(v, {"a", "b"});
  if (m % 2 == 0) return su != sv;
  return su[0] + su[1] != sv[0] + sv[1];
}

}  // namespace oracle

#ifdef DOCTEST_VERSION_STR
namespace doctest {
template <>
struct StringMaker<artin::Word> {
  static String convert(const artin::Word& w) { return artin::format_word(w).c_str(); }
};
}  // namespace doctest
#endif
