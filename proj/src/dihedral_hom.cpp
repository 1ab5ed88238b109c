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


#include "artin/dihedral_hom.hpp"

#include <algorithm>
#include <numeric>

#include "artin/error.hpp"
#include "artin/free_product.hpp"

namespace artin::hom {

namespace {

Word b1(std::int64_t e = 1) { return Word::generator(kTargetGen1, e); }
Word b2(std::int64_t e = 1) { return Word::generator(kTargetGen2, e); }

void check_letters(const Word& w, const char* what) {
  for (const auto& s : w.syllables())
    if (s.generator != kTargetGen1 && s.generator != kTargetGen2)
      throw InvalidArgument(std::string(what) + " uses letter '" + s.generator +
                            "'; expected b1 and b2 only");
}

// Every case id the classification admits for the parity class, before static
// filtering.
std::vector<std::string> class_ids(Label mA, Label mB) {
  if (mA.is_infinite()) return {"1"};
  if (mA.is_odd()) return mB.is_odd() ? std::vector<std::string>{"3a", "3b"}
                                      : std::vector<std::string>{"2"};
  if (mB.is_infinite()) return {"4"};
  if (mB.is_odd()) return {"5a", "5b", "5c"};
  if (mB.value() == 2) return {"7"};
  return {"6a", "6b"};
}

HomFamily make_family(const std::string& id, Label mA, Label mB) {
  HomFamily f{id, mA, mB, {}, {}, {}};
  if (id == "1" || id == "7") {
    f.params = {Slot::Element};
    f.image_formula = "any element of B";
  } else if (id == "2" || id == "3a") {
    f.image_formula = "b1";
  } else if (id == "3b") {
    f.params = {Slot::T};
    f.constraints = {"m_B | m_A"};
    f.image_formula = "b1^t b2 b1^-t";
  } else if (id == "4") {
    f.params = {Slot::T};
    f.image_formula = "b1^t";
  } else if (id == "5a" || id == "6a") {
    f.params = {Slot::T1, Slot::T2};
    f.image_formula = "delta_B^t1 b1^t2";
  } else if (id == "5b") {
    f.params = {Slot::T, Slot::Beta};
    f.constraints = {"4 | m_A", "t odd"};
    f.image_formula = "b1^-1 beta Delta_B^t beta^-1";
  } else if (id == "5c") {
    f.params = {Slot::T, Slot::Beta};
    f.constraints = {"q | m_A/2 where p = gcd(t, m_B), q = m_B/p"};
    f.image_formula = "b1^-1 beta u_B^t beta^-1";
  } else if (id == "6b") {
    f.params = {Slot::T, Slot::Beta};
    f.constraints = {"q | m_A/2 where p = gcd(t, m_B/2), q = m_B/(2p)"};
    f.image_formula = "b1^-1 beta u_B^t beta^-1";
  }
  return f;
}

// First violated side condition, with its numbers filled in.
std::optional<std::string> failed_constraint(const HomFamily& f, const HomParams& p) {
  const std::string& id = f.case_id;
  if (id == "3b") {
    if (f.mA.value() % f.mB.value() != 0)
      return "m_B | m_A fails: " + f.mB.to_string() + " does not divide " + f.mA.to_string();
  } else if (id == "5b") {
    if (f.mA.value() % 4 != 0) return "4 | m_A fails: m_A = " + f.mA.to_string();
    if (*p.t % 2 == 0) return "t odd fails: t = " + std::to_string(*p.t);
  } else if (id == "5c" || id == "6b") {
    const std::int64_t base = id == "5c" ? f.mB.value() : f.mB.value() / 2;
    const std::int64_t pp = std::gcd(*p.t, base);
    const std::int64_t q = base / pp;
    const std::int64_t half = f.mA.value() / 2;
    if (half % q != 0)
      return "q | m_A/2 fails: p = " + std::to_string(pp) + ", q = " + std::to_string(q) +
             ", m_A/2 = " + std::to_string(half);
  }
  return std::nullopt;
}

HomCandidate build(const HomFamily& f, const HomParams& p, bool checked) {
  const auto ids = class_ids(f.mA, f.mB);
  if (std::find(ids.begin(), ids.end(), f.case_id) == ids.end())
    throw InvalidArgument("family " + f.case_id + " does not belong to (m_A, m_B) = (" +
                          f.mA.to_string() + ", " + f.mB.to_string() + ")");
  const HomFamily canonical = make_family(f.case_id, f.mA, f.mB);
  for (Slot s : canonical.params) {
    const bool present = (s == Slot::T && p.t) || (s == Slot::T1 && p.t1) ||
                         (s == Slot::T2 && p.t2) || (s == Slot::Beta && p.beta) ||
                         (s == Slot::Element && p.element);
    if (!present)
      throw InvalidArgument("family " + f.case_id + " needs parameter " + to_string(s));
  }
  if (p.beta) check_letters(*p.beta, "beta");
  if (p.element) check_letters(*p.element, "element");
  if (checked)
    if (auto why = failed_constraint(canonical, p)) throw InvalidArgument(*why);

  const std::string& id = f.case_id;
  Word image;
  if (id == "1" || id == "7") {
    image = *p.element;
  } else if (id == "2" || id == "3a") {
    image = b1();
  } else if (id == "3b") {
    image = concat(concat(b1(*p.t), b2()), b1(-*p.t));
  } else if (id == "4") {
    image = b1(*p.t);
  } else {
    const auto B = target_presentation(f.mB);
    if (id == "5a" || id == "6a") {
      image = concat(power(dihedral::center_gen(B), *p.t1), b1(*p.t2));
    } else {
      const Word x = id == "5b" ? dihedral::delta(B) : dihedral::u_elem(B);
      image = concat(b1(-1), conjugate(power(x, *p.t), *p.beta));
    }
  }
  return {f.mA, f.mB, b1(), image};
}

// Lift of a B/Z(B) element using exponents of least absolute value; any lift
// works as a conjugator since lifts differ by central elements.
Word short_lift(const dihedral::Presentation& B, const fp::FpWord& w) {
  std::vector<fp::Syllable> out;
  for (auto s : w.syllables()) {
    const auto order = w.signature().order(s.factor);
    if (!order.is_infinite() && 2 * s.exponent > order.n) s.exponent -= order.n;
    out.push_back(s);
  }
  Word lifted;
  const bool odd = B.m().is_odd();
  for (const auto& s : out) {
    Word piece;
    if (s.factor == 2)
      piece = power(dihedral::u_elem(B), s.exponent);
    else
      piece = odd ? power(dihedral::delta(B), s.exponent) : b1(s.exponent);
    lifted = concat(lifted, piece);
  }
  return free_reduce(lifted);
}

// β with g = β x β⁻¹ found through B/Z(B), where the class of x is a single
// syllable (or trivial). Exact equality of the lifts follows because both
// sides have the same abelianization and Z(B) is infinite cyclic of nonzero
// degree; it is still re-checked.
std::optional<Word> conjugator(const dihedral::Presentation& B, const Word& g, const Word& x,
                               int bound) {
  const fp::FpWord qg = dihedral::to_center_quotient(B, g);
  const fp::FpWord qx = dihedral::to_center_quotient(B, x);
  const auto cr = fp::cyclic_reduce(qg);
  if (!(cr.core == qx)) return std::nullopt;
  if (cr.conjugator.syllable_length() > static_cast<std::size_t>(std::max(bound, 0)))
    return std::nullopt;
  Word beta = short_lift(B, cr.conjugator);
  if (!dihedral::words_equal(B, g, conjugate(x, beta)))
    throw InternalError("conjugator lifted from B/Z(B) does not conjugate in B");
  return beta;
}

std::optional<HomParams> match(const HomFamily& f, const Word& image, int bound) {
  const std::string& id = f.case_id;
  const auto B = target_presentation(f.mB);
  HomParams p;
  if (id == "1" || id == "7") {
    p.element = free_reduce(image);
    return p;
  }
  if (id == "2" || id == "3a") {
    if (dihedral::words_equal(B, image, b1())) return p;
    return std::nullopt;
  }
  if (id == "3b") {
    const std::int64_t reach = static_cast<std::int64_t>(image.length()) + std::max(bound, 0) + 1;
    for (std::int64_t k = 0; k <= reach; ++k)
      for (std::int64_t t : {k, -k}) {
        if (dihedral::words_equal(B, image, concat(concat(b1(t), b2()), b1(-t)))) {
          p.t = t;
          return p;
        }
        if (k == 0) break;
      }
    return std::nullopt;
  }
  if (id == "4") {
    const Word r = free_reduce(image);
    if (r.empty()) {
      p.t = 0;
      return p;
    }
    if (r.syllable_length() == 1 && r.syllables()[0].generator == kTargetGen1) {
      p.t = r.syllables()[0].exponent;
      return p;
    }
    return std::nullopt;
  }
  if (id == "5a" || id == "6a") {
    const auto cm = dihedral::centralizer_membership(B, image, 0, 1);
    if (!cm.member) return std::nullopt;
    p.t1 = cm.s;
    p.t2 = cm.t;
    return p;
  }
  // 5b, 5c, 6b: b1 · image is a conjugate of Δ_B^t or u_B^t, and t is forced
  // by the total degree.
  const Word g = concat(b1(), image);
  const std::int64_t total = abelianize(g, Grading::TotalSum).total();
  const bool use_delta = id == "5b";
  const std::int64_t degree = use_delta ? f.mB.value() : 2;
  if (total % degree != 0) return std::nullopt;
  p.t = total / degree;
  p.beta = Word();
  if (failed_constraint(f, p)) return std::nullopt;
  const Word x = power(use_delta ? dihedral::delta(B) : dihedral::u_elem(B), *p.t);
  auto beta = conjugator(B, g, x, bound);
  if (!beta) return std::nullopt;
  p.beta = *beta;
  return p;
}

}  // namespace

dihedral::Presentation target_presentation(Label mB) {
  return dihedral::Presentation(mB, kTargetGen1, kTargetGen2);
}

std::string to_string(Slot slot) {
  switch (slot) {
    case Slot::T: return "t";
    case Slot::T1: return "t1";
    case Slot::T2: return "t2";
    case Slot::Beta: return "beta";
    case Slot::Element: return "element";
  }
  return "?";
}

std::vector<HomFamily> enumerate_cases(Label mA, Label mB) {
  std::vector<HomFamily> out;
  for (const auto& id : class_ids(mA, mB)) {
    if (id == "3b" && mA.value() % mB.value() != 0) continue;
    if (id == "5b" && mA.value() % 4 != 0) continue;
    out.push_back(make_family(id, mA, mB));
  }
  return out;
}

HomCandidate instantiate(const HomFamily& family, const HomParams& params) {
  return build(family, params, true);
}

HomCandidate instantiate_unchecked(const HomFamily& family, const HomParams& params) {
  return build(family, params, false);
}

bool verify_hom(const HomCandidate& c) {
  check_letters(c.image_a1, "image of a1");
  check_letters(c.image_a2, "image of a2");
  if (c.mA.is_infinite()) return true;
  const auto B = target_presentation(c.mB);
  const std::int64_t n = c.mA.value();
  return dihedral::words_equal(B, pi_product(c.image_a1, c.image_a2, n),
                               pi_product(c.image_a2, c.image_a1, n));
}

Classification classify_image(const HomCandidate& c, int bound) {
  check_letters(c.image_a1, "image of a1");
  check_letters(c.image_a2, "image of a2");
  if (!(free_reduce(c.image_a1) == b1())) throw InvalidArgument("image of a1 must be b1");
  for (const auto& f : enumerate_cases(c.mA, c.mB))
    if (auto p = match(f, c.image_a2, bound)) return Matched{f, std::move(*p)};
  return Unknown{};
}

}  // namespace artin::hom
