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


#include "artin/classifier.hpp"

#include <algorithm>
#include <random>

#include "artin/error.hpp"

namespace artin::classifier {

namespace {

std::vector<GeneratorId> sorted_generators(const CoxeterMatrix& m) {
  auto g = m.generators();
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<GeneratorId> numbered_names(std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::vector<GeneratorId> out;
  for (std::size_t i = 1; i <= count; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

// Odd chain m_1, m_2, ... with each entry dividing the previous one.
std::vector<std::uint32_t> odd_divisor_chain(std::size_t length, std::mt19937_64& rng) {
  static constexpr std::uint32_t kStarts[] = {3, 5, 7, 9, 15, 21, 25, 27, 45, 63, 75, 105, 135, 225, 315};
  std::vector<std::uint32_t> chain;
  if (length == 0) return chain;
  chain.push_back(kStarts[rng() % std::size(kStarts)]);
  while (chain.size() < length) {
    std::vector<std::uint32_t> divisors;
    for (std::uint32_t d = 3; d <= chain.back(); d += 2)
      if (chain.back() % d == 0) divisors.push_back(d);
    chain.push_back(divisors[rng() % divisors.size()]);
  }
  return chain;
}

}  // namespace

std::string to_string(TripleRule rule) {
  switch (rule) {
    case TripleRule::OddOddRequiresOdd: return "OddOddRequiresOdd";
    case TripleRule::OddEvenRequiresEven: return "OddEvenRequiresEven";
    case TripleRule::DivisibilityAmongOdds: return "DivisibilityAmongOdds";
    case TripleRule::EvenEvenOddRequiresEqual: return "EvenEvenOddRequiresEqual";
  }
  return "?";
}

std::optional<TripleRule> check_triple(Label m1, Label m2, Label m3) {
  std::array<Label, 3> all{m1, m2, m3};
  std::vector<Label> odd;
  std::vector<Label> rest;
  for (Label l : all) (l.is_odd() ? odd : rest).push_back(l);

  switch (odd.size()) {
    case 3: {
      std::array<std::uint32_t, 3> v{m1.value(), m2.value(), m3.value()};
      std::sort(v.begin(), v.end());
      // Up to permutation: the two largest agree and the smallest divides them.
      if (v[1] == v[2] && v[2] % v[0] == 0) return std::nullopt;
      return TripleRule::DivisibilityAmongOdds;
    }
    case 2:
      return TripleRule::OddOddRequiresOdd;
    case 1:
      if (rest[0].is_infinite() != rest[1].is_infinite()) return TripleRule::OddEvenRequiresEven;
      if (rest[0] != rest[1]) return TripleRule::EvenEvenOddRequiresEqual;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

TripleVerdict check_triple(const CoxeterMatrix& m, const GeneratorId& a, const GeneratorId& b,
                           const GeneratorId& c) {
  std::array<GeneratorId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw InvalidArgument("triple needs pairwise distinct generators");
  TripleVerdict v{t, {m.label(t[0], t[1]), m.label(t[0], t[2]), m.label(t[1], t[2])}, {}};
  v.failure = check_triple(v.labels[0], v.labels[1], v.labels[2]);
  return v;
}

RetractCompatibility is_retract_compatible(const CoxeterMatrix& m) {
  RetractCompatibility out;
  const auto g = sorted_generators(m);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!m.label(g[i], g[j]).is_odd()) {
        out.compatible = false;
        out.non_odd_pair = {g[i], g[j]};
        return out;
      }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        auto v = check_triple(m, g[i], g[j], g[k]);
        if (!v.passed()) {
          out.compatible = false;
          out.failing_triple = std::move(v);
          return out;
        }
      }
  return out;
}

std::optional<TripleVerdict> first_failing_triple(const CoxeterMatrix& m) {
  const auto g = sorted_generators(m);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        auto v = check_triple(m, g[i], g[j], g[k]);
        if (!v.passed()) return v;
      }
  return std::nullopt;
}

bool triples_criterion(const CoxeterMatrix& m) { return !first_failing_triple(m).has_value(); }

CompatibilityReport is_parabolic_retract_compatible(const CoxeterMatrix& m) {
  Compatible result{odd_components(m), {}};
  const auto& blocks = result.partition.blocks;
  bool ok = true;
  for (const auto& block : blocks) {
    if (!is_retract_compatible(submatrix(m, {block.begin(), block.end()})).compatible) {
      ok = false;
      break;
    }
  }
  for (std::size_t i = 0; ok && i < blocks.size(); ++i)
    for (std::size_t j = i + 1; ok && j < blocks.size(); ++j) {
      const Label n = m.label(blocks[i].front(), blocks[j].front());
      for (const auto& a : blocks[i])
        for (const auto& b : blocks[j])
          if (m.label(a, b) != n || n.is_odd()) ok = false;
      if (ok) result.cross_labels.emplace(std::make_pair(i, j), n);
    }
  if (ok) return result;

  auto witness = first_failing_triple(m);
  if (!witness)
    throw InternalError("partition check failed but every triple passes: " + to_json(m));
  return Incompatible{std::move(*witness)};
}

CoxeterMatrix gen_retract_compatible(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("gen_retract_compatible needs n >= 1");
  std::mt19937_64 rng(seed);
  const auto names = numbered_names(n);
  const auto chain = odd_divisor_chain(n - 1, rng);
  std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>> labels;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) labels.push_back({{names[i], names[j]}, Label::finite(chain[i])});
  return CoxeterMatrix(names, labels);
}

CoxeterMatrix gen_parabolic_retractable(const std::vector<std::size_t>& block_sizes,
                                        std::uint64_t seed, std::optional<Label> cross) {
  if (block_sizes.empty()) throw InvalidArgument("gen_parabolic_retractable needs at least one block");
  if (cross && cross->is_odd()) throw InvalidArgument("cross label must be even or inf");
  std::size_t total = 0;
  for (auto s : block_sizes) {
    if (s == 0) throw InvalidArgument("block sizes must be >= 1");
    total += s;
  }
  std::mt19937_64 rng(seed);
  const auto names = numbered_names(total);
  static constexpr std::uint32_t kCross[] = {2, 4, 6, 8, 10, 12, 0};

  std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>> labels;
  std::vector<std::size_t> offset;
  std::size_t next = 0;
  for (auto size : block_sizes) {
    offset.push_back(next);
    const auto chain = odd_divisor_chain(size - 1, rng);
    for (std::size_t i = 0; i + 1 < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        labels.push_back({{names[next + i], names[next + j]}, Label::finite(chain[i])});
    next += size;
  }
  for (std::size_t bi = 0; bi < block_sizes.size(); ++bi)
    for (std::size_t bj = bi + 1; bj < block_sizes.size(); ++bj) {
      Label n = Label::infinity();
      if (cross) {
        n = *cross;
      } else {
        const auto pick = kCross[rng() % std::size(kCross)];
        n = pick == 0 ? Label::infinity() : Label::finite(pick);
      }
      if (n.is_infinite()) continue;
      for (std::size_t i = 0; i < block_sizes[bi]; ++i)
        for (std::size_t j = 0; j < block_sizes[bj]; ++j)
          labels.push_back({{names[offset[bi] + i], names[offset[bj] + j]}, n});
    }
  return CoxeterMatrix(names, labels);
}

}  // namespace artin::classifier
