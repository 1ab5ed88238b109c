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


#include <numeric>
#include <random>

#include <doctest.h>

#include "artin/error.hpp"
#include "artin/free_product.hpp"
#include "oracles.hpp"

using namespace artin::fp;

namespace {

const Signature k23{FactorOrder::finite(2), FactorOrder::finite(3)};

FpWord fw(const char* text, Signature sig = k23) { return parse_fp_word(text, sig); }

FpWord random_fp(std::mt19937_64& rng, Signature sig, int syllables) {
  std::vector<Syllable> raw;
  int factor = static_cast<int>(oracle::uniform(rng, 1, 2));
  for (int i = 0; i < syllables; ++i) {
    const auto order = sig.order(factor);
    std::int64_t e;
    if (order.is_infinite()) {
      e = oracle::uniform(rng, 1, 2) * (oracle::uniform(rng, 0, 1) ? 1 : -1);
    } else {
      e = oracle::uniform(rng, 1, order.n - 1);
    }
    raw.push_back({factor, e});
    factor = 3 - factor;
  }
  return normalize(raw, sig);
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize({{1, 1}, {1, 1}}, k23).empty());
  CHECK(normalize({{2, 4}}, k23).syllables() == std::vector<Syllable>{{2, 1}});
  CHECK(normalize({{1, 1}, {2, 1}, {2, 2}}, k23).syllables() == std::vector<Syllable>{{1, 1}});
  CHECK(normalize({{2, -1}}, k23).syllables() == std::vector<Syllable>{{2, 2}});
  const Signature inf4{FactorOrder::infinite(), FactorOrder::finite(4)};
  CHECK(normalize({{1, 3}, {2, 4}, {1, -3}}, inf4).empty());
}

TEST_CASE("cyclic reduction") {
  const auto a = cyclic_reduce(fw("x y x"));
  CHECK(a.core == fw("y"));
  CHECK(a.conjugator == fw("x"));
  const auto b = cyclic_reduce(fw("x y"));
  CHECK(b.core == fw("x y"));
  CHECK(b.conjugator.empty());
  const auto c = cyclic_reduce(FpWord(k23));
  CHECK(c.core.empty());
  CHECK(c.conjugator.empty());

  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const FpWord w = random_fp(rng, k23, static_cast<int>(oracle::uniform(rng, 0, 8)));
    const auto r = cyclic_reduce(w);
    CHECK(multiply(multiply(r.conjugator, r.core), inverse(r.conjugator)) == w);
  }
}

TEST_CASE("classify action") {
  const auto x = classify_action(fw("x"));
  REQUIRE(std::holds_alternative<Elliptic>(x));
  CHECK(std::get<Elliptic>(x).fixed_vertex == base_vertex(k23, 1));

  const auto xy = classify_action(fw("x y"));
  REQUIRE(std::holds_alternative<Hyperbolic>(xy));
  CHECK(std::get<Hyperbolic>(xy).translation_length == 2);

  CHECK(translation_length(classify_action(fw("x y x y^2"))) == 4);
}

TEST_CASE("tree distance oracle") {
  CHECK(tree_distance_oracle(fw("x"), 4) == 0);
  CHECK(tree_distance_oracle(fw("x y"), 4) == 2);
  CHECK(tree_distance_oracle(fw("x y x y^2"), 6) == 4);
}

TEST_CASE("tree structure") {
  const auto h = base_vertex(k23, 1);
  const auto k = base_vertex(k23, 2);
  CHECK(distance(h, k) == 1);
  CHECK(distance(h, h) == 0);
  CHECK(act(fw("x"), h) == h);
  CHECK(distance(h, act(fw("y"), h)) == 2);
  CHECK(distance(act(fw("x y"), h), act(fw("x y x"), k)) == 1);
}

TEST_CASE("axis sample lies on a line translated by the element") {
  std::mt19937_64 rng(8);
  for (const Signature sig :
       {k23, Signature{FactorOrder::infinite(), FactorOrder::finite(4)}}) {
    for (int i = 0; i < 200; ++i) {
      const FpWord w = random_fp(rng, sig, static_cast<int>(oracle::uniform(rng, 1, 6)));
      const auto action = classify_action(w);
      if (!std::holds_alternative<Hyperbolic>(action)) continue;
      const auto& h = std::get<Hyperbolic>(action);
      REQUIRE(h.axis_sample.size() == 4);
      CHECK(distance(h.axis_sample[0], h.axis_sample[1]) == 1);
      CHECK(distance(h.axis_sample[0], h.axis_sample[2]) == h.translation_length);
      CHECK(act(w, h.axis_sample[0]) == h.axis_sample[2]);
      CHECK(act(w, h.axis_sample[1]) == h.axis_sample[3]);
    }
  }
}

TEST_CASE("translation length is a conjugacy invariant") {
  std::mt19937_64 rng(9);
  const Signature sig{FactorOrder::finite(2), FactorOrder::finite(5)};
  for (int i = 0; i < 300; ++i) {
    const FpWord w = random_fp(rng, sig, static_cast<int>(oracle::uniform(rng, 0, 6)));
    const FpWord g = random_fp(rng, sig, static_cast<int>(oracle::uniform(rng, 0, 5)));
    const FpWord c = multiply(multiply(g, w), inverse(g));
    const auto a = classify_action(w);
    const auto b = classify_action(c);
    CHECK(a.index() == b.index());
    CHECK(translation_length(a) == translation_length(b));
  }
}

TEST_CASE("elliptic iff finite order when both factors are finite") {
  std::mt19937_64 rng(10);
  const Signature sig{FactorOrder::finite(2), FactorOrder::finite(3)};
  for (int i = 0; i < 300; ++i) {
    const FpWord w = random_fp(rng, sig, static_cast<int>(oracle::uniform(rng, 0, 6)));
    bool finite_order = false;
    FpWord p = w;
    for (int k = 1; k <= std::lcm(2, 3); ++k) {
      if (p.empty()) finite_order = true;
      p = multiply(p, w);
    }
    CHECK(std::holds_alternative<Elliptic>(classify_action(w)) == finite_order);
  }
}

TEST_CASE("hyperbolic lengths are even and at least two") {
  std::mt19937_64 rng(12);
  const Signature sig{FactorOrder::infinite(), FactorOrder::finite(3)};
  for (int i = 0; i < 300; ++i) {
    const auto action = classify_action(random_fp(rng, sig, static_cast<int>(oracle::uniform(rng, 0, 7))));
    if (const auto* h = std::get_if<Hyperbolic>(&action)) {
      CHECK(h->translation_length >= 2);
      CHECK(h->translation_length % 2 == 0);
    }
  }
}

TEST_CASE("text format") {
  CHECK(format_fp_word(fw("x y^4 x")) == "x y x");
  CHECK(format_fp_word(FpWord(k23)) == "1");
  CHECK(parse_signature("inf,4") ==
        Signature{FactorOrder::infinite(), FactorOrder::finite(4)});
  CHECK_THROWS_AS(parse_signature("1,3"), artin::InvalidArgument);
  CHECK_THROWS(fw("z"));
}
