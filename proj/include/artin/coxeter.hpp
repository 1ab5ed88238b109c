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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Generator names are tokens `[A-Za-z_][A-Za-z0-9_]*`. Ordering between
/// generators is plain lexicographic comparison on the name; every tie-break in
/// the library uses it.
using GeneratorId = std::string;

bool is_valid_generator_name(std::string_view name);

/// An off-diagonal Coxeter label: an integer m >= 2 or infinity.
class Label {
 public:
  /// Throws InvalidArgument for m < 2.
  static Label finite(std::uint32_t m);
  static constexpr Label infinity() { return Label(0); }

  constexpr bool is_infinite() const { return value_ == 0; }
  constexpr bool is_finite() const { return value_ != 0; }
  constexpr bool is_odd() const { return value_ != 0 && value_ % 2 == 1; }
  constexpr bool is_even() const { return value_ != 0 && value_ % 2 == 0; }

  /// The integer value; precondition is_finite().
  std::uint32_t value() const;

  /// "inf" or the decimal value.
  std::string to_string() const;
  /// Accepts "inf", "∞" or a decimal integer >= 2.
  static Label parse(std::string_view text);

  friend constexpr bool operator==(Label, Label) = default;
  /// Finite labels order numerically; infinity is the largest label.
  friend constexpr std::strong_ordering operator<=>(Label a, Label b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr explicit Label(std::uint32_t raw) : value_(raw) {}
  std::uint32_t value_;  // 0 encodes infinity
};

/// Symmetric Coxeter matrix over an ordered, finite generating set. Labels are
/// keyed on unordered pairs, so asymmetric matrices cannot be expressed; the
/// diagonal is implicitly 1 and never stored. Immutable after construction.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  /// All pairs start at infinity; `labels` overrides individual pairs. Throws
  /// InvalidArgument on duplicate/invalid generator names, self-pairs, unknown
  /// generators or a pair listed twice.
  CoxeterMatrix(std::vector<GeneratorId> generators,
                const std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>>& labels);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<GeneratorId>& generators() const { return generators_; }

  bool contains(std::string_view g) const;
  /// Position of `g` in generators(); throws InvalidArgument if unknown.
  std::size_t index_of(std::string_view g) const;

  Label label(std::size_t i, std::size_t j) const;
  Label label(std::string_view a, std::string_view b) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::vector<GeneratorId> generators_;
  std::map<GeneratorId, std::size_t, std::less<>> index_;
  std::vector<Label> upper_;  // row-major strict upper triangle
};

/// Parse the JSON graph format:
///   {"generators": ["a", ...], "labels": [{"pair": ["a","b"], "m": 3}, ...]}
/// with "m" an integer >= 2 or "inf". Absent pairs are infinity.
/// Throws ParseError (syntax, with byte offset) or InvalidArgument (semantics,
/// naming the offending labels[] entry).
CoxeterMatrix parse_coxeter(std::string_view text);

/// Serialize in the same format. Pairs are emitted in lexicographic order and
/// infinite labels are omitted, so parse_coxeter(to_json(M)) == M.
std::string to_json(const CoxeterMatrix& m);

/// Restriction to the rows and columns of `subset`; generator order is
/// inherited from `m`.
CoxeterMatrix submatrix(const CoxeterMatrix& m, const std::set<GeneratorId>& subset);

/// Connected components of the graph whose edges are the odd finite labels.
struct OddComponentPartition {
  /// Each block sorted lexicographically; blocks ordered by least member.
  std::vector<std::vector<GeneratorId>> blocks;
  std::map<GeneratorId, std::size_t> block_index;

  friend bool operator==(const OddComponentPartition&, const OddComponentPartition&) = default;
};

OddComponentPartition odd_components(const CoxeterMatrix& m);

}  // namespace artin
