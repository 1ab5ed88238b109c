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


#include "artin/free_product.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>

#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin::fp {

namespace {

std::int64_t reduce_exponent(std::int64_t e, FactorOrder order) {
  if (order.is_infinite()) return e;
  const std::int64_t r = e % order.n;
  return r < 0 ? r + order.n : r;
}

int other(int factor) { return factor == 1 ? 2 : 1; }

}  // namespace

FactorOrder FactorOrder::finite(std::int64_t n) {
  if (n < 2) throw InvalidArgument("cyclic factor order must be >= 2 or infinite");
  return {n};
}

std::string FactorOrder::to_string() const { return is_infinite() ? "inf" : std::to_string(n); }

FpWord normalize(const std::vector<Syllable>& raw, Signature sig) {
  FpWord out(sig);
  auto& stack = out.syllables_;
  for (const auto& s : raw) {
    if (s.factor != 1 && s.factor != 2) throw InvalidArgument("free-product factor must be 1 or 2");
    const auto order = sig.order(s.factor);
    std::int64_t e = reduce_exponent(s.exponent, order);
    if (e == 0) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      e = reduce_exponent(stack.back().exponent + e, order);
      if (e == 0)
        stack.pop_back();
      else
        stack.back().exponent = e;
    } else {
      stack.push_back({s.factor, e});
    }
  }
  return out;
}

FpWord multiply(const FpWord& u, const FpWord& v) {
  if (!(u.signature() == v.signature())) throw InvalidArgument("free-product signature mismatch");
  std::vector<Syllable> raw(u.syllables());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return normalize(raw, u.signature());
}

FpWord inverse(const FpWord& w) {
  std::vector<Syllable> raw(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return normalize(raw, w.signature());
}

FpWord power(const FpWord& w, std::int64_t n) {
  const FpWord base = n < 0 ? inverse(w) : w;
  FpWord out(w.signature());
  for (std::int64_t i = 0; i < std::abs(n); ++i) out = multiply(out, base);
  return out;
}

CyclicReduction cyclic_reduce(const FpWord& w) {
  const Signature sig = w.signature();
  FpWord core = w;
  std::vector<Syllable> conj;
  while (core.syllable_length() >= 2 &&
         core.syllables().front().factor == core.syllables().back().factor) {
    const Syllable first = core.syllables().front();
    conj.push_back(first);
    std::vector<Syllable> raw(core.syllables().begin() + 1, core.syllables().end());
    raw.push_back(first);
    core = normalize(raw, sig);
  }
  return {core, normalize(conj, sig)};
}

Vertex make_vertex(const FpWord& g, int factor) {
  if (g.syllable_length() == 0 || g.syllables().back().factor != factor) return {factor, g};
  std::vector<Syllable> raw(g.syllables().begin(), g.syllables().end() - 1);
  return {factor, normalize(raw, g.signature())};
}

Vertex base_vertex(Signature sig, int factor) { return {factor, FpWord(sig)}; }

Vertex act(const FpWord& g, const Vertex& v) { return make_vertex(multiply(g, v.rep), v.factor); }

std::int64_t distance(const Vertex& v, const Vertex& w) {
  const FpWord g = multiply(inverse(v.rep), w.rep);
  const auto& s = g.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  if (lo < hi && s[lo].factor == v.factor) ++lo;
  if (lo < hi && s[hi - 1].factor == w.factor) --hi;
  const auto len = static_cast<std::int64_t>(hi - lo);
  if (len == 0 && v.factor == w.factor) return 0;
  return len + 1;
}

TreeAction classify_action(const FpWord& w) {
  const auto [core, conj] = cyclic_reduce(w);
  if (core.syllable_length() <= 1) {
    const int factor = core.empty() ? 1 : core.syllables().front().factor;
    return Elliptic{make_vertex(conj, factor)};
  }
  const Vertex x1 = make_vertex(conj, 1);
  const Vertex x2 = make_vertex(conj, 2);
  return Hyperbolic{static_cast<std::int64_t>(core.syllable_length()),
                    {x1, x2, act(w, x1), act(w, x2)}};
}

std::int64_t translation_length(const TreeAction& action) {
  if (const auto* h = std::get_if<Hyperbolic>(&action)) return h->translation_length;
  return 0;
}

std::int64_t tree_distance_oracle(const FpWord& w, int radius) {
  const Signature sig = w.signature();
  std::int64_t span = 1;
  for (const auto& s : w.syllables()) span = std::max(span, std::abs(s.exponent));

  auto elements = [&](int factor) {
    std::vector<std::int64_t> out;
    const auto order = sig.order(factor);
    if (order.is_infinite()) {
      for (std::int64_t e = 1; e <= span; ++e) {
        out.push_back(e);
        out.push_back(-e);
      }
    } else {
      for (std::int64_t e = 1; e < order.n; ++e) out.push_back(e);
    }
    return out;
  };
  const std::vector<std::int64_t> elems[2] = {elements(1), elements(2)};

  // The graph is a tree, so a depth-first walk that never steps back to the
  // parent visits each vertex within the radius exactly once.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(const Vertex&, const Vertex*, int)> walk = [&](const Vertex& x,
                                                                   const Vertex* parent,
                                                                   int depth) {
    if (best == 0) return;
    best = std::min(best, distance(x, act(w, x)));
    if (depth == radius) return;
    // Neighbours of v(pF) are v(p f G) for f in F, G the other factor; f = 1
    // gives v(pG).
    auto visit = [&](const Vertex& y) {
      if (!parent || !(y == *parent)) walk(y, &x, depth + 1);
    };
    visit(make_vertex(x.rep, other(x.factor)));
    for (std::int64_t e : elems[x.factor - 1]) {
      std::vector<Syllable> raw(x.rep.syllables());
      raw.push_back({x.factor, e});
      visit(make_vertex(normalize(raw, sig), other(x.factor)));
    }
  };
  walk(base_vertex(sig, 1), nullptr, 0);
  return best;
}

FpWord parse_fp_word(std::string_view text, Signature sig) {
  const Word w = parse_word(text);
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    if (s.generator != "x" && s.generator != "y")
      throw ParseError("free-product words use generators x (factor 1) and y (factor 2), got '" +
                       s.generator + "'");
    raw.push_back({s.generator == "x" ? 1 : 2, s.exponent});
  }
  return normalize(raw, sig);
}

std::string format_fp_word(const FpWord& w) {
  std::vector<artin::Syllable> out;
  for (const auto& s : w.syllables()) out.push_back({s.factor == 1 ? "x" : "y", s.exponent});
  return format_word(Word(std::move(out)));
}

Signature parse_signature(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("signature must be two orders separated by a comma, e.g. 2,3");
  auto one = [](std::string_view t) {
    if (t == "inf") return FactorOrder::infinite();
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw ParseError("invalid factor order '" + std::string(t) + "'");
    return FactorOrder::finite(n);
  };
  return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
}

}  // namespace artin::fp
