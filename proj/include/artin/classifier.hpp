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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin::classifier {

enum class TripleRule {
  OddOddRequiresOdd,
  OddEvenRequiresEven,
  DivisibilityAmongOdds,
  EvenEvenOddRequiresEqual,
};

std::string to_string(TripleRule rule);

/// Verdict on three labels, independent of which pair carries which label.
/// Pass iff the triple can sit inside a parabolic-retract-compatible matrix.
std::optional<TripleRule> check_triple(Label m1, Label m2, Label m3);

struct TripleVerdict {
  std::array<GeneratorId, 3> triple;  // lexicographically sorted
  std::array<Label, 3> labels;        // (m_ab, m_ac, m_bc)
  std::optional<TripleRule> failure;  // empty on Pass

  bool passed() const { return !failure.has_value(); }
};

TripleVerdict check_triple(const CoxeterMatrix& m, const GeneratorId& a, const GeneratorId& b,
                           const GeneratorId& c);

/// Why a matrix is not retract-compatible: an even/∞ pair, or a failing triple.
struct RetractCompatibility {
  bool compatible = true;
  std::optional<std::pair<GeneratorId, GeneratorId>> non_odd_pair;
  std::optional<TripleVerdict> failing_triple;
};

RetractCompatibility is_retract_compatible(const CoxeterMatrix& m);

struct Compatible {
  OddComponentPartition partition;
  /// Constant label between blocks i < j.
  std::map<std::pair<std::size_t, std::size_t>, Label> cross_labels;
};

struct Incompatible {
  /// Lexicographically least failing triple.
  TripleVerdict first_violation;
};

using CompatibilityReport = std::variant<Compatible, Incompatible>;

/// Decides parabolic-retract-compatibility from the odd-component partition,
/// the only candidate partition.
CompatibilityReport is_parabolic_retract_compatible(const CoxeterMatrix& m);

inline bool is_compatible(const CompatibilityReport& r) {
  return std::holds_alternative<Compatible>(r);
}

/// Every 3-generator submatrix passes check_triple. Shares no code with the
/// partition-based decision above.
bool triples_criterion(const CoxeterMatrix& m);

/// Lexicographically least triple failing check_triple, if any.
std::optional<TripleVerdict> first_failing_triple(const CoxeterMatrix& m);

/// Odd chain with divisibility: m_{i,j} = m_i for i < j, each m_i dividing
/// m_{i-1}. Generators are s1..sn (zero-padded when n >= 10).
CoxeterMatrix gen_retract_compatible(std::size_t n, std::uint64_t seed);

/// Blocks built by gen_retract_compatible, joined pairwise by one even label or
/// by no edge. `cross`, when given, is used for every block pair.
CoxeterMatrix gen_parabolic_retractable(const std::vector<std::size_t>& block_sizes,
                                        std::uint64_t seed,
                                        std::optional<Label> cross = std::nullopt);

}  // namespace artin::classifier
