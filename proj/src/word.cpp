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


#include "artin/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "artin/error.hpp"

namespace artin {

Word::Word(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (auto& s : syllables)
    if (s.exponent != 0) syllables_.push_back(std::move(s));
}

Word Word::generator(GeneratorId g, std::int64_t exponent) {
  return Word({Syllable{std::move(g), exponent}});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += std::abs(s.exponent);
  return n;
}

Word pi_word(const GeneratorId& s, const GeneratorId& t, std::int64_t m) {
  if (m < 0) throw InvalidArgument("pi_word: negative length " + std::to_string(m));
  std::vector<Syllable> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) out.push_back({i % 2 == 0 ? s : t, 1});
  return free_reduce(Word(std::move(out)));
}

Word pi_product(const Word& u, const Word& v, std::int64_t m) {
  if (m < 0) throw InvalidArgument("pi_product: negative length " + std::to_string(m));
  std::vector<Syllable> out;
  for (std::int64_t i = 0; i < m; ++i) {
    const auto& part = (i % 2 == 0 ? u : v).syllables();
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(Word(std::move(out)));
}

Word free_reduce(const Word& w) {
  std::vector<Syllable> stack;
  stack.reserve(w.syllable_length());
  for (const auto& s : w.syllables()) {
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Syllable> out(u.syllables());
  out.insert(out.end(), v.syllables().begin(), v.syllables().end());
  return free_reduce(Word(std::move(out)));
}

Word invert(const Word& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return free_reduce(Word(std::move(out)));
}

Word conjugate(const Word& w, const Word& by) { return concat(concat(by, w), invert(by)); }

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? invert(w) : free_reduce(w);
  std::vector<Syllable> out;
  for (std::int64_t i = 0; i < std::abs(n); ++i)
    out.insert(out.end(), base.syllables().begin(), base.syllables().end());
  return free_reduce(Word(std::move(out)));
}

std::int64_t AbelianImage::at(const std::string& key) const {
  auto it = coordinates.find(key);
  return it == coordinates.end() ? 0 : it->second;
}

std::int64_t AbelianImage::total() const {
  std::int64_t sum = 0;
  for (const auto& [k, v] : coordinates) sum += v;
  return sum;
}

AbelianImage& AbelianImage::operator+=(const AbelianImage& other) {
  for (const auto& [k, v] : other.coordinates) {
    auto& slot = coordinates[k];
    slot += v;
    if (slot == 0) coordinates.erase(k);
  }
  return *this;
}

AbelianImage abelianize(const Word& w, Grading grading) {
  AbelianImage out;
  for (const auto& s : w.syllables()) {
    AbelianImage one;
    one.coordinates[grading == Grading::TotalSum ? std::string() : s.generator] = s.exponent;
    out += one;
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  bool saw_identity = false;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    const std::string_view token = text.substr(start, pos - start);
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("word parse error at offset " + std::to_string(start) + " ('" +
                        std::string(token) + "'): " + why);
    };
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    const auto caret = token.find('^');
    const std::string_view name = token.substr(0, caret);
    if (!is_valid_generator_name(name)) throw fail("invalid generator name");
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw fail("exponent must be an integer");
      if (exponent == 0) throw fail("exponent must be nonzero");
    }
    out.push_back({std::string(name), exponent});
  }
  if (saw_identity && !out.empty())
    throw ParseError("word parse error: identity token '1' cannot be mixed with generators");
  return Word(std::move(out));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace artin
