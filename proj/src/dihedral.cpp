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


#include "artin/dihedral.hpp"

#include <algorithm>
#include <cstdlib>

#include "artin/error.hpp"

namespace artin::dihedral {

namespace {

// Positive-part arithmetic for A(m), m >= 3 finite. Simples are stored as
// (first letter, length) with 0 <= length <= m; the identity is {0, 0} and Δ
// is {0, m}.
class GarsideBuilder {
 public:
  explicit GarsideBuilder(int m) : m_(m) {}

  void multiply_letter(int letter, std::int64_t exponent) {
    if (exponent > 0) {
      for (std::int64_t i = 0; i < exponent; ++i) append(Simple{letter, 1});
    } else {
      for (std::int64_t i = 0; i < -exponent; ++i) multiply_inverse_letter(letter);
    }
  }

  GarsideNormalForm finish() && { return {delta_power_, std::move(factors_)}; }

 private:
  static int letter_at(int first, int i) { return first ^ (i & 1); }
  int last(const Simple& s) const { return letter_at(s.first, s.length - 1); }
  bool is_delta(const Simple& s) const { return s.length == m_; }

  Simple canonical(Simple s) const {
    if (s.length == 0 || s.length == m_) s.first = 0;
    return s;
  }

  // Δ x Δ⁻¹: swaps the generators for odd m, trivial for even m.
  Simple tau(Simple s) const {
    if (m_ % 2 == 1 && s.length != 0 && s.length != m_) s.first ^= 1;
    return s;
  }

  // Replace (s, t) by (s·p, p⁻¹t) with p the longest prefix of t for which
  // s·p stays simple.
  void left_weight(Simple& s, Simple& t) const {
    if (t.length == 0 || is_delta(s)) return;
    if (s.length == 0) {
      s = t;
      t = Simple{0, 0};
      return;
    }
    if (is_delta(t)) {
      t = tau(s);
      s = Simple{0, m_};
      return;
    }
    if (t.first == last(s)) return;
    const int j = std::min(t.length, m_ - s.length);
    s = canonical(Simple{s.first, s.length + j});
    t = canonical(Simple{letter_at(t.first, j), t.length - j});
  }

  void append(Simple s) {
    factors_.push_back(canonical(s));
    for (std::size_t i = factors_.size() - 1; i-- > 0;) left_weight(factors_[i], factors_[i + 1]);
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    delta_power_ += static_cast<std::int64_t>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    while (!factors_.empty() && factors_.back().length == 0) factors_.pop_back();
    for (const auto& f : factors_)
      if (f.length == 0 || is_delta(f)) throw InternalError("Garside pass left a non-proper factor");
  }

  // Δ^k F x⁻¹ = Δ^{k-1} τ(F) (Δ x⁻¹), and Δ x⁻¹ is the simple of length m-1
  // that ends just before x.
  void multiply_inverse_letter(int x) {
    --delta_power_;
    for (auto& f : factors_) f = tau(f);
    const int end_letter = x ^ 1;
    const int first = letter_at(end_letter, m_ - 2);
    append(Simple{first, m_ - 1});
  }

  int m_;
  std::int64_t delta_power_ = 0;
  std::vector<Simple> factors_;
};

void check_generators(const Presentation& p, const Word& w) {
  for (const auto& s : w.syllables()) p.index_of(s.generator);
}

void require_finite(const Presentation& p, const char* what) {
  if (p.m().is_infinite())
    throw PreconditionError(std::string(what) + " requires a finite label");
}

Word word_from_simple(const Presentation& p, const Simple& s) {
  return pi_word(p.name(s.first), p.name(s.first ^ 1), s.length);
}

}  // namespace

Presentation::Presentation(Label m, GeneratorId gen1, GeneratorId gen2)
    : m_(m), gen1_(std::move(gen1)), gen2_(std::move(gen2)) {
  if (!is_valid_generator_name(gen1_) || !is_valid_generator_name(gen2_))
    throw InvalidArgument("invalid generator name in dihedral presentation");
  if (!(gen1_ < gen2_))
    throw InvalidArgument("dihedral presentation needs gen1 < gen2, got '" + gen1_ + "', '" +
                          gen2_ + "'");
}

Presentation::Presentation(Label m) : Presentation(m, "a", "b") {}

int Presentation::index_of(const GeneratorId& g) const {
  if (g == gen1_) return 0;
  if (g == gen2_) return 1;
  throw InvalidArgument("generator '" + g + "' is not in the dihedral presentation {" + gen1_ +
                        ", " + gen2_ + "}");
}

Word delta(const Presentation& p) {
  require_finite(p, "delta");
  return pi_word(p.gen1(), p.gen2(), p.m().value());
}

Word center_gen(const Presentation& p) {
  require_finite(p, "center_gen");
  const Word d = delta(p);
  return p.m().is_odd() ? concat(d, d) : d;
}

Word u_elem(const Presentation& p) {
  return Word({{p.gen1(), 1}, {p.gen2(), 1}});
}

NormalForm normal_form(const Presentation& p, const Word& w) {
  check_generators(p, w);
  if (p.m().is_infinite()) return free_reduce(w);
  if (p.m().value() == 2) {
    ExponentPair pair;
    for (const auto& s : w.syllables()) (p.index_of(s.generator) == 0 ? pair.first : pair.second) += s.exponent;
    return pair;
  }
  GarsideBuilder builder(static_cast<int>(p.m().value()));
  for (const auto& s : w.syllables()) builder.multiply_letter(p.index_of(s.generator), s.exponent);
  return std::move(builder).finish();
}

Word to_word(const Presentation& p, const NormalForm& nf) {
  if (const auto* w = std::get_if<Word>(&nf)) return *w;
  if (const auto* pair = std::get_if<ExponentPair>(&nf))
    return free_reduce(Word({{p.gen1(), pair->first}, {p.gen2(), pair->second}}));
  const auto& g = std::get<GarsideNormalForm>(nf);
  Word out = power(delta(p), g.delta_power);
  for (const auto& s : g.factors) out = concat(out, word_from_simple(p, s));
  return out;
}

bool words_equal(const Presentation& p, const Word& u, const Word& v) {
  return normal_form(p, u) == normal_form(p, v);
}

bool is_left_weighted(const Presentation& p, const GarsideNormalForm& nf) {
  require_finite(p, "is_left_weighted");
  const auto m = static_cast<int>(p.m().value());
  for (const auto& s : nf.factors)
    if (s.length < 1 || s.length >= m || (s.first != 0 && s.first != 1)) return false;
  for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
    const auto& s = nf.factors[i];
    const int last = s.first ^ ((s.length - 1) & 1);
    if (nf.factors[i + 1].first != last) return false;
  }
  return true;
}

bool is_central(const Presentation& p, const Word& w) {
  check_generators(p, w);
  if (p.m().is_infinite()) return free_reduce(w).empty();
  bool commutes = true;
  for (const auto& g : {p.gen1(), p.gen2()}) {
    const Word x = Word::generator(g);
    commutes = commutes && words_equal(p, concat(w, x), concat(x, w));
  }
  if (p.m().value() == 2) return commutes;
  const auto nf = std::get<GarsideNormalForm>(normal_form(p, w));
  const bool in_delta_subgroup =
      nf.factors.empty() && (p.m().is_even() || nf.delta_power % 2 == 0);
  if (commutes != in_delta_subgroup)
    throw InternalError("is_central: commutation test and <δ>-membership disagree");
  return commutes;
}

CentralizerMembership centralizer_membership(const Presentation& p, const Word& w,
                                             std::int64_t k1, std::int64_t k2) {
  require_finite(p, "centralizer_membership");
  if (k2 == 0) throw PreconditionError("centralizer_membership requires k2 != 0");
  check_generators(p, w);
  const Word of = concat(power(center_gen(p), k1), Word::generator(p.gen1(), k2));
  if (!words_equal(p, concat(w, of), concat(of, w))) return {};

  const std::int64_t m = p.m().value();
  std::int64_t s = 0;
  std::int64_t t = 0;
  if (m == 2) {
    const auto pair = std::get<ExponentPair>(normal_form(p, w));
    s = pair.second;
    t = pair.first - pair.second;
  } else if (m % 2 == 0) {
    // δ = Δ has per-generator degree (m/2, m/2); gen1 has (1, 0).
    const auto abel = abelianize(w, Grading::PerGenerator);
    const std::int64_t e1 = abel.at(p.gen1());
    const std::int64_t e2 = abel.at(p.gen2());
    if (e2 % (m / 2) != 0) throw InternalError("centralizer_membership: degree not a multiple of m/2");
    s = e2 / (m / 2);
    t = e1 - e2;
  } else {
    // Odd m: only the total degree is a homomorphism. For δ^s a^t the left
    // normal form has inf = 2s + min(t,0) and sup = 2s + max(t,0), so
    // deg - inf - sup = (2m - 4) s.
    const std::int64_t deg = abelianize(w, Grading::TotalSum).total();
    const auto nf = std::get<GarsideNormalForm>(normal_form(p, w));
    const std::int64_t inf = nf.delta_power;
    const std::int64_t sup = nf.delta_power + static_cast<std::int64_t>(nf.factors.size());
    const std::int64_t rest = deg - inf - sup;
    if (rest % (2 * m - 4) != 0) throw InternalError("centralizer_membership: inconsistent degrees");
    s = rest / (2 * m - 4);
    t = deg - 2 * m * s;
  }
  const Word expected = concat(power(center_gen(p), s), Word::generator(p.gen1(), t));
  if (!words_equal(p, w, expected))
    throw InternalError("centralizer_membership: commuting element outside <δ, gen1>");
  return {true, s, t};
}

fp::Signature center_quotient_signature(const Presentation& p) {
  require_finite(p, "to_center_quotient");
  const std::int64_t m = p.m().value();
  if (m == 2) throw PreconditionError("to_center_quotient is undefined for m = 2");
  if (m % 2 == 1) return {fp::FactorOrder::finite(2), fp::FactorOrder::finite(m)};
  return {fp::FactorOrder::infinite(), fp::FactorOrder::finite(m / 2)};
}

fp::FpWord to_center_quotient(const Presentation& p, const Word& w) {
  const fp::Signature sig = center_quotient_signature(p);
  check_generators(p, w);
  const std::int64_t m = p.m().value();
  // Images of gen1 and gen2 in A/Z(A).
  std::vector<fp::Syllable> image[2];
  if (m % 2 == 1) {
    const std::int64_t n = (m - 1) / 2;
    image[0] = {{2, -n}, {1, 1}};     // ū^{-n} Δ̄
    image[1] = {{1, -1}, {2, n + 1}};  // Δ̄⁻¹ ū^{n+1}
  } else {
    image[0] = {{1, 1}};            // c̄1
    image[1] = {{1, -1}, {2, 1}};   // c̄1⁻¹ ū
  }
  std::vector<fp::Syllable> raw;
  for (const auto& s : w.syllables()) {
    const auto& img = image[p.index_of(s.generator)];
    for (std::int64_t i = 0; i < std::abs(s.exponent); ++i) {
      if (s.exponent > 0) {
        raw.insert(raw.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back({it->factor, -it->exponent});
      }
    }
  }
  return fp::normalize(raw, sig);
}

Word lift_from_center_quotient(const Presentation& p, const fp::FpWord& w) {
  require_finite(p, "lift_from_center_quotient");
  const bool odd = p.m().is_odd();
  Word out;
  for (const auto& s : w.syllables()) {
    Word piece;
    if (s.factor == 2)
      piece = power(u_elem(p), s.exponent);
    else
      piece = odd ? power(delta(p), s.exponent) : Word::generator(p.gen1(), s.exponent);
    out = concat(out, piece);
  }
  return out;
}

CoxeterImage coxeter_quotient_eval(const Presentation& p, const Word& w) {
  require_finite(p, "coxeter_quotient_eval");
  check_generators(p, w);
  const std::int64_t m = p.m().value();
  CoxeterImage acc;
  for (const auto& s : w.syllables()) {
    // Generators are reflections, so only the parity of the exponent matters.
    if (s.exponent % 2 == 0) continue;
    const std::int64_t r = p.index_of(s.generator) == 0 ? 0 : m - 1;
    // (ρ^a σ^f)(ρ^r σ) = ρ^{a ± r} σ^{f+1}
    acc.rotation = ((acc.rotation + (acc.reflection ? -r : r)) % m + m) % m;
    acc.reflection = !acc.reflection;
  }
  return acc;
}

}  // namespace artin::dihedral
