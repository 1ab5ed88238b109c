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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin::retraction {

/// Ordinary generator map S -> X ∪ {1}; std::nullopt stands for the identity.
class GeneratorMap {
 public:
  using Image = std::optional<GeneratorId>;

  /// Identity on every generator of `source`, target set = all of S.
  explicit GeneratorMap(CoxeterMatrix source);
  /// Throws InvalidArgument when `assignment` does not cover exactly S, sends
  /// something outside X ∪ {1}, or moves an element of X.
  GeneratorMap(CoxeterMatrix source, std::set<GeneratorId> target,
               std::map<GeneratorId, Image> assignment);

  const CoxeterMatrix& source() const { return source_; }
  const std::set<GeneratorId>& target() const { return target_; }
  const std::map<GeneratorId, Image>& assignment() const { return assignment_; }
  const Image& operator()(const GeneratorId& g) const;

 private:
  CoxeterMatrix source_;
  std::set<GeneratorId> target_;
  std::map<GeneratorId, Image> assignment_;
};

enum class StepRule { PsiMap, PhiSingletonToIdentity, PhiViaPsi };

std::string to_string(StepRule rule);

struct TraceStep {
  GeneratorId removed;
  StepRule rule;
  std::optional<GeneratorId> target;  // empty for PhiSingletonToIdentity
};

struct RetractionTrace {
  std::vector<TraceStep> steps;
};

/// ψ_x : A_S -> A_{S∖{x}} for retract-compatible M, |S| >= 2. Sends x to the
/// neighbour y with least label (ties: least name). Throws PreconditionError
/// outside the domain, InternalError if a divisibility claim m_{y,z} | m_{x,z}
/// fails.
GeneratorMap synth_psi(const CoxeterMatrix& m, const GeneratorId& x);

/// φ_x : A_S -> A_{S∖{x}} for parabolic-retract-compatible M: x ↦ 1 when x is
/// alone in its odd component, otherwise ψ_x computed inside the component.
GeneratorMap synth_phi(const CoxeterMatrix& m, const GeneratorId& x);

/// Retraction onto A_X composed from φ steps, removing S∖X in lexicographic
/// order.
std::pair<GeneratorMap, RetractionTrace> synth_retraction(const CoxeterMatrix& m,
                                                          const std::set<GeneratorId>& keep);

/// Substitute images into w and freely reduce. InvalidArgument on generators
/// outside S.
Word apply(const GeneratorMap& r, const Word& w);

/// ρ^α(g) = α · ρ(α⁻¹ g α) · α⁻¹, a retraction onto α A_X α⁻¹.
class ConjugatedRetraction {
 public:
  ConjugatedRetraction(GeneratorMap base, Word alpha);

  const GeneratorMap& base() const { return base_; }
  const Word& alpha() const { return alpha_; }
  Word operator()(const Word& g) const;

 private:
  GeneratorMap base_;
  Word alpha_;
};

ConjugatedRetraction conjugate_retraction(const GeneratorMap& r, const Word& alpha);

struct Verification {
  bool verified = true;
  /// Offending pair (or the single generator twice for structural failures).
  std::optional<std::pair<GeneratorId, GeneratorId>> pair;
  std::string reason;
};

/// Checks the defining relation of every finite-label pair under r, deciding
/// case u ≠ v in the dihedral parabolic A_{u,v}; also re-checks that r fixes
/// its target pointwise and is ordinary.
Verification verify_retraction(const CoxeterMatrix& m, const GeneratorMap& r);

}  // namespace artin::retraction
