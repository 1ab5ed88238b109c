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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/dihedral.hpp"
#include "artin/word.hpp"

// Homomorphisms A(m_A) -> B(m_B) between dihedral Artin groups sending a1 to
// b1. The target group is always presented on generators "b1" < "b2".
namespace artin::hom {

inline constexpr const char* kTargetGen1 = "b1";
inline constexpr const char* kTargetGen2 = "b2";

/// Presentation of B(m_B) on b1, b2.
dihedral::Presentation target_presentation(Label mB);

/// Parameter slots a family can use.
enum class Slot { T, T1, T2, Beta, Element };

std::string to_string(Slot slot);

struct HomFamily {
  std::string case_id;  // "1", "2", "3a", "3b", "4", "5a", "5b", "5c", "6a", "6b", "7"
  Label mA;
  Label mB;
  std::vector<Slot> params;
  /// Side conditions as human-readable arithmetic, e.g. "4 | m_A".
  std::vector<std::string> constraints;
  /// Image of a2, e.g. "b1^-1 β u_B^t β^-1".
  std::string image_formula;
};

struct HomParams {
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> t1;
  std::optional<std::int64_t> t2;
  std::optional<Word> beta;
  /// The arbitrary image for families 1 and 7.
  std::optional<Word> element;

  friend bool operator==(const HomParams&, const HomParams&) = default;
};

struct HomCandidate {
  Label mA;
  Label mB;
  Word image_a1;  // always the single letter b1
  Word image_a2;
};

/// Families listed for the parity class of (mA, mB), in case-id order.
/// Families whose side condition depends only on (mA, mB) and fails are left
/// out (3b when m_B does not divide m_A, 5b when 4 does not divide m_A).
std::vector<HomFamily> enumerate_cases(Label mA, Label mB);

/// Build the candidate. InvalidArgument when a required slot is missing, a
/// word parameter uses letters other than b1, b2, or a side condition fails;
/// the message names the failing condition with its evaluated numbers.
HomCandidate instantiate(const HomFamily& family, const HomParams& params);

/// Same image formula with the side conditions skipped. Only meant for
/// checking that the conditions are necessary.
HomCandidate instantiate_unchecked(const HomFamily& family, const HomParams& params);

/// Π(b1, φ(a2), m_A) = Π(φ(a2), b1, m_A) in B. Always true for m_A = ∞.
/// InvalidArgument on letters other than b1, b2.
bool verify_hom(const HomCandidate& c);

struct Matched {
  HomFamily family;
  HomParams params;
};

struct Unknown {};

using Classification = std::variant<Matched, Unknown>;

/// Best-effort family match for a verified candidate, first match in case-id
/// order. Conjugators are searched up to `bound` syllables in the free product
/// B / Z(B). Unknown is not a proof that no family applies.
Classification classify_image(const HomCandidate& c, int bound);

}  // namespace artin::hom
