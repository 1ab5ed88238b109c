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
#include <variant>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/free_product.hpp"
#include "artin/word.hpp"

namespace artin::dihedral {

/// A(m) = <gen1, gen2 | Π(gen1, gen2, m) = Π(gen2, gen1, m)>, gen1 < gen2.
/// The ordering fixes u = gen1 · gen2.
class Presentation {
 public:
  /// Throws InvalidArgument unless gen1 < gen2 (and both are valid names).
  Presentation(Label m, GeneratorId gen1, GeneratorId gen2);
  /// Generators "a" and "b".
  explicit Presentation(Label m);

  Label m() const { return m_; }
  const GeneratorId& gen1() const { return gen1_; }
  const GeneratorId& gen2() const { return gen2_; }
  /// 0 for gen1, 1 for gen2; InvalidArgument for anything else.
  int index_of(const GeneratorId& g) const;
  const GeneratorId& name(int index) const { return index == 0 ? gen1_ : gen2_; }

 private:
  Label m_;
  GeneratorId gen1_;
  GeneratorId gen2_;
};

/// Garside element Π(gen1, gen2, m). m finite.
Word delta(const Presentation& p);
/// Generator of the center: Δ² for odd m, Δ for even m. m finite.
Word center_gen(const Presentation& p);
/// gen1 · gen2
Word u_elem(const Presentation& p);

/// Positive simple element: the alternating word of `length` letters starting
/// with generator `first` (0 or 1). Proper simples have 1 <= length <= m-1.
struct Simple {
  int first;
  int length;

  friend bool operator==(const Simple&, const Simple&) = default;
};

/// Left normal form Δ^delta_power · s_1 ⋯ s_r; every s_i is proper and each
/// pair (s_i, s_{i+1}) is left-weighted.
struct GarsideNormalForm {
  std::int64_t delta_power = 0;
  std::vector<Simple> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// A(2) = Z × Z: exponent sums of gen1 and gen2.
struct ExponentPair {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Garside form for finite m >= 3, exponent pair for m = 2, freely reduced word
/// for m = ∞. Two words represent the same element iff their forms compare
/// equal.
using NormalForm = std::variant<GarsideNormalForm, ExponentPair, Word>;

NormalForm normal_form(const Presentation& p, const Word& w);
/// Expand a normal form back into a word over gen1, gen2.
Word to_word(const Presentation& p, const NormalForm& nf);
bool words_equal(const Presentation& p, const Word& u, const Word& v);
/// True iff the left-weighted condition holds between every pair of factors.
bool is_left_weighted(const Presentation& p, const GarsideNormalForm& nf);

/// Commutes with both generators. For finite m >= 3 this is cross-checked
/// against membership in <δ> read off the normal form (InternalError on
/// disagreement). For m = ∞ the center is trivial: true iff w reduces to 1.
bool is_central(const Presentation& p, const Word& w);

/// Membership of w in the centralizer <δ, gen1> of δ^k1 · gen1^k2 (k2 != 0).
struct CentralizerMembership {
  bool member = false;
  /// w = δ^s · gen1^t when member.
  std::int64_t s = 0;
  std::int64_t t = 0;
};

/// Throws PreconditionError for m = ∞ or k2 = 0.
CentralizerMembership centralizer_membership(const Presentation& p, const Word& w,
                                             std::int64_t k1, std::int64_t k2);

/// Image in A/Z(A). For odd m the factors are <Δ̄> (order 2) and <ū> (order m);
/// for even m they are <ā1> (infinite) and <ū> (order m/2). Throws
/// PreconditionError for m ∈ {2, ∞}.
fp::FpWord to_center_quotient(const Presentation& p, const Word& w);
fp::Signature center_quotient_signature(const Presentation& p);
/// Word in A whose class is the given element of A/Z(A).
Word lift_from_center_quotient(const Presentation& p, const fp::FpWord& w);

/// Element ρ^rotation · σ^reflection of the dihedral group of order 2m, where
/// gen1 ↦ σ and gen2 ↦ ρ^{-1}σ (so gen1·gen2 ↦ ρ).
struct CoxeterImage {
  std::int64_t rotation = 0;  // mod m
  bool reflection = false;

  friend bool operator==(const CoxeterImage&, const CoxeterImage&) = default;
};

/// Image in the finite Coxeter quotient. Throws PreconditionError for m = ∞.
CoxeterImage coxeter_quotient_eval(const Presentation& p, const Word& w);

}  // namespace artin::dihedral
