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

#include "artin/classifier.hpp"
#include "artin/error.hpp"
#include "oracles.hpp"

using namespace artin;
using namespace artin::classifier;

namespace {

Label L(std::uint32_t v) { return Label::finite(v); }
const Label kInf = Label::infinity();

CoxeterMatrix triangle(Label ab, Label ac, Label bc) {
  return CoxeterMatrix({"a", "b", "c"}, {{{"a", "b"}, ab}, {{"a", "c"}, ac}, {{"b", "c"}, bc}});
}

const std::vector<Label>& pool() {
  static const std::vector<Label> p = {L(2), L(3), L(4), L(5), L(6), L(9), kInf};
  return p;
}

CoxeterMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::pair<std::string, std::string>, Label>> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      labels.push_back({{gens[i], gens[j]}, pool()[oracle::uniform(rng, 0, pool().size() - 1)]});
  return CoxeterMatrix(gens, labels);
}

// Random matrix built to be compatible: random blocks of odd chains plus a
// constant cross label per block pair.
CoxeterMatrix random_compatible(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  for (std::size_t left = n; left > 0;) {
    const std::size_t s = oracle::uniform(rng, 1, left);
    sizes.push_back(s);
    left -= s;
  }
  return gen_parabolic_retractable(sizes, rng());
}

}  // namespace

TEST_CASE("triple rules") {
  CHECK_FALSE(check_triple(L(9), L(9), L(3)).has_value());
  CHECK(check_triple(L(5), L(5), L(3)) == TripleRule::DivisibilityAmongOdds);
  CHECK(check_triple(L(3), L(3), L(4)) == TripleRule::OddOddRequiresOdd);
  CHECK(check_triple(L(4), L(6), L(3)) == TripleRule::EvenEvenOddRequiresEqual);
  CHECK(check_triple(L(3), L(4), kInf) == TripleRule::OddEvenRequiresEven);
  CHECK_FALSE(check_triple(L(3), kInf, kInf).has_value());
  CHECK_FALSE(check_triple(L(3), L(4), L(4)).has_value());
  CHECK_FALSE(check_triple(L(2), L(4), kInf).has_value());
  CHECK(check_triple(L(3), L(5), L(7)) == TripleRule::DivisibilityAmongOdds);
  CHECK(check_triple(L(3), L(3), kInf) == TripleRule::OddOddRequiresOdd);
}

TEST_CASE("triple verdict is symmetric in the labels") {
  for (auto x : pool())
    for (auto y : pool())
      for (auto z : pool()) {
        const auto v = check_triple(x, y, z);
        CHECK(check_triple(y, x, z) == v);
        CHECK(check_triple(z, y, x) == v);
        CHECK(check_triple(x, z, y) == v);
      }
}

TEST_CASE("retract-compatible") {
  CHECK(is_retract_compatible(CoxeterMatrix({"a"}, {})).compatible);
  CHECK(is_retract_compatible(triangle(L(9), L(9), L(3))).compatible);
  const auto bad = is_retract_compatible(triangle(L(3), L(3), L(5)));
  CHECK_FALSE(bad.compatible);
  REQUIRE(bad.failing_triple.has_value());
  CHECK(bad.failing_triple->triple == std::array<GeneratorId, 3>{"a", "b", "c"});
  const auto even = is_retract_compatible(triangle(L(3), L(3), L(4)));
  CHECK_FALSE(even.compatible);
  CHECK(even.non_odd_pair.has_value());
}

TEST_CASE("parabolic-retract-compatible") {
  const CoxeterMatrix four({"a", "b", "c", "d"}, {{{"a", "b"}, L(3)},
                                                  {{"c", "d"}, L(5)},
                                                  {{"a", "c"}, L(4)},
                                                  {{"a", "d"}, L(4)},
                                                  {{"b", "c"}, L(4)},
                                                  {{"b", "d"}, L(4)}});
  const auto r = is_parabolic_retract_compatible(four);
  REQUIRE(std::holds_alternative<Compatible>(r));
  const auto& ok = std::get<Compatible>(r);
  CHECK(ok.partition.blocks == std::vector<std::vector<GeneratorId>>{{"a", "b"}, {"c", "d"}});
  CHECK(ok.cross_labels.at({0, 1}) == L(4));

  const auto bad = is_parabolic_retract_compatible(triangle(L(3), L(3), L(4)));
  REQUIRE(std::holds_alternative<Incompatible>(bad));
  CHECK(std::get<Incompatible>(bad).first_violation.failure == TripleRule::OddOddRequiresOdd);

  const auto even = is_parabolic_retract_compatible(triangle(L(2), L(4), L(6)));
  REQUIRE(std::holds_alternative<Compatible>(even));
  CHECK(std::get<Compatible>(even).partition.blocks.size() == 3);
}

TEST_CASE("triples criterion") {
  CHECK(triples_criterion(CoxeterMatrix({"a", "b"}, {{{"a", "b"}, L(7)}})));
  CHECK(triples_criterion(triangle(L(9), L(9), L(3))));
  CHECK_FALSE(triples_criterion(triangle(L(3), L(4), kInf)));
}

TEST_CASE("partition decision matches the definition and the triple criterion") {
  // Exhaustive rank 3.
  for (auto x : pool())
    for (auto y : pool())
      for (auto z : pool()) {
        const auto m = triangle(x, y, z);
        const bool by_partition = is_compatible(is_parabolic_retract_compatible(m));
        CHECK(by_partition == oracle::prc_by_definition(m));
        CHECK(by_partition == triples_criterion(m));
      }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const auto m = i % 2 ? random_matrix(rng, oracle::uniform(rng, 4, 5))
                         : random_compatible(rng, oracle::uniform(rng, 4, 5));
    const bool by_partition = is_compatible(is_parabolic_retract_compatible(m));
    CHECK(by_partition == oracle::prc_by_definition(m));
    CHECK(by_partition == triples_criterion(m));
  }
}

TEST_CASE("certificates re-check in isolation") {
  std::mt19937_64 rng(32);
  int seen = 0;
  for (int i = 0; i < 500; ++i) {
    const auto m = random_matrix(rng, oracle::uniform(rng, 3, 6));
    const auto r = is_parabolic_retract_compatible(m);
    if (const auto* bad = std::get_if<Incompatible>(&r)) {
      ++seen;
      const auto& v = bad->first_violation;
      REQUIRE(v.failure.has_value());
      CHECK(v.triple[0] < v.triple[1]);
      CHECK(v.triple[1] < v.triple[2]);
      CHECK(v.labels[0] == m.label(v.triple[0], v.triple[1]));
      CHECK(v.labels[1] == m.label(v.triple[0], v.triple[2]));
      CHECK(v.labels[2] == m.label(v.triple[1], v.triple[2]));
      CHECK(check_triple(v.labels[0], v.labels[1], v.labels[2]) == v.failure);
      const auto sub = submatrix(m, {v.triple[0], v.triple[1], v.triple[2]});
      CHECK_FALSE(is_compatible(is_parabolic_retract_compatible(sub)));
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("compatibility is inherited by submatrices") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_compatible(rng, oracle::uniform(rng, 2, 7));
    REQUIRE(is_compatible(is_parabolic_retract_compatible(m)));
    std::set<GeneratorId> x;
    for (const auto& g : m.generators())
      if (oracle::uniform(rng, 0, 1)) x.insert(g);
    CHECK(is_compatible(is_parabolic_retract_compatible(submatrix(m, x))));
  }
}

TEST_CASE("generators") {
  CHECK(gen_retract_compatible(1, 0).rank() == 1);
  const auto chain = triangle(L(9), L(9), L(3));
  CHECK(is_retract_compatible(chain).compatible);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto m = gen_retract_compatible(1 + seed % 9, seed);
    CHECK(m.rank() == 1 + seed % 9);
    CHECK(is_retract_compatible(m).compatible);
  }
  const auto blocks = gen_parabolic_retractable({2, 1}, 7, L(4));
  CHECK(blocks.rank() == 3);
  const auto report = is_parabolic_retract_compatible(blocks);
  REQUIRE(std::holds_alternative<Compatible>(report));
  CHECK(std::get<Compatible>(report).cross_labels.at({0, 1}) == L(4));
  CHECK_THROWS_AS(gen_parabolic_retractable({2, 1}, 7, L(3)), InvalidArgument);
  CHECK(gen_retract_compatible(12, 3).generators().front() == "s01");
  CHECK(gen_retract_compatible(5, 3) == gen_retract_compatible(5, 3));
}
