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


#include "artin/retraction.hpp"

#include <algorithm>

#include "artin/classifier.hpp"
#include "artin/dihedral.hpp"
#include "artin/error.hpp"

namespace artin::retraction {

namespace {

std::set<GeneratorId> all_generators(const CoxeterMatrix& m) {
  return {m.generators().begin(), m.generators().end()};
}

std::string describe(const GeneratorMap::Image& img) { return img ? *img : std::string("1"); }

}  // namespace

GeneratorMap::GeneratorMap(CoxeterMatrix source)
    : source_(std::move(source)), target_(all_generators(source_)) {
  for (const auto& g : source_.generators()) assignment_.emplace(g, g);
}

GeneratorMap::GeneratorMap(CoxeterMatrix source, std::set<GeneratorId> target,
                           std::map<GeneratorId, Image> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  for (const auto& x : target_)
    if (!source_.contains(x)) throw InvalidArgument("target generator '" + x + "' not in source");
  if (assignment_.size() != source_.rank())
    throw InvalidArgument("generator map must assign every generator exactly once");
  for (const auto& [g, img] : assignment_) {
    if (!source_.contains(g)) throw InvalidArgument("generator map assigns unknown '" + g + "'");
    if (img && !target_.count(*img))
      throw InvalidArgument("image of '" + g + "' is outside the target set");
    if (target_.count(g) && img != g)
      throw InvalidArgument("generator map moves target generator '" + g + "'");
  }
}

const GeneratorMap::Image& GeneratorMap::operator()(const GeneratorId& g) const {
  auto it = assignment_.find(g);
  if (it == assignment_.end()) throw InvalidArgument("generator '" + g + "' not in map source");
  return it->second;
}

std::string to_string(StepRule rule) {
  switch (rule) {
    case StepRule::PsiMap: return "PsiMap";
    case StepRule::PhiSingletonToIdentity: return "PhiSingletonToIdentity";
    case StepRule::PhiViaPsi: return "PhiViaPsi";
  }
  return "?";
}

GeneratorMap synth_psi(const CoxeterMatrix& m, const GeneratorId& x) {
  if (!m.contains(x)) throw InvalidArgument("unknown generator '" + x + "'");
  if (m.rank() < 2) throw PreconditionError("synth_psi needs at least two generators");
  if (!classifier::is_retract_compatible(m).compatible)
    throw PreconditionError("synth_psi needs a retract-compatible matrix");

  std::optional<GeneratorId> y;
  for (const auto& cand : m.generators()) {
    if (cand == x) continue;
    if (!y) {
      y = cand;
      continue;
    }
    const Label lc = m.label(x, cand);
    const Label ly = m.label(x, *y);
    if (lc < ly || (lc == ly && cand < *y)) y = cand;
  }
  for (const auto& z : m.generators()) {
    if (z == x || z == *y) continue;
    if (m.label(x, z).value() % m.label(*y, z).value() != 0)
      throw InternalError("synth_psi: m(" + *y + "," + z + ") does not divide m(" + x + "," + z +
                          ") in a retract-compatible matrix");
  }

  auto target = all_generators(m);
  target.erase(x);
  std::map<GeneratorId, GeneratorMap::Image> assignment;
  for (const auto& g : m.generators()) assignment[g] = g;
  assignment[x] = *y;
  return GeneratorMap(m, std::move(target), std::move(assignment));
}

GeneratorMap synth_phi(const CoxeterMatrix& m, const GeneratorId& x) {
  if (!m.contains(x)) throw InvalidArgument("unknown generator '" + x + "'");
  const auto report = classifier::is_parabolic_retract_compatible(m);
  const auto* ok = std::get_if<classifier::Compatible>(&report);
  if (!ok) throw PreconditionError("synth_phi needs a parabolic-retract-compatible matrix");

  const auto& block = ok->partition.blocks[ok->partition.block_index.at(x)];
  auto target = all_generators(m);
  target.erase(x);
  std::map<GeneratorId, GeneratorMap::Image> assignment;
  for (const auto& g : m.generators()) assignment[g] = g;
  if (block.size() == 1) {
    assignment[x] = std::nullopt;
  } else {
    const GeneratorMap psi = synth_psi(submatrix(m, {block.begin(), block.end()}), x);
    assignment[x] = psi(x);
  }
  return GeneratorMap(m, std::move(target), std::move(assignment));
}

std::pair<GeneratorMap, RetractionTrace> synth_retraction(const CoxeterMatrix& m,
                                                          const std::set<GeneratorId>& keep) {
  for (const auto& g : keep)
    if (!m.contains(g)) throw InvalidArgument("kept generator '" + g + "' is not in the matrix");
  if (!classifier::is_compatible(classifier::is_parabolic_retract_compatible(m)))
    throw PreconditionError("matrix is not parabolic-retract-compatible");

  std::vector<GeneratorId> removal;
  for (const auto& g : m.generators())
    if (!keep.count(g)) removal.push_back(g);
  std::sort(removal.begin(), removal.end());

  std::map<GeneratorId, GeneratorMap::Image> images;
  for (const auto& g : m.generators()) images[g] = g;
  auto current = all_generators(m);
  RetractionTrace trace;
  for (const auto& x : removal) {
    const GeneratorMap phi = synth_phi(submatrix(m, current), x);
    const auto& img = phi(x);
    trace.steps.push_back({x, img ? StepRule::PhiViaPsi : StepRule::PhiSingletonToIdentity, img});
    for (auto& [g, image] : images)
      if (image) image = phi(*image);
    current.erase(x);
  }
  return {GeneratorMap(m, keep, std::move(images)), std::move(trace)};
}

Word apply(const GeneratorMap& r, const Word& w) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    const auto& img = r(s.generator);
    if (img) out.push_back({*img, s.exponent});
  }
  return free_reduce(Word(std::move(out)));
}

ConjugatedRetraction::ConjugatedRetraction(GeneratorMap base, Word alpha)
    : base_(std::move(base)), alpha_(free_reduce(alpha)) {
  for (const auto& s : alpha_.syllables()) base_(s.generator);
}

Word ConjugatedRetraction::operator()(const Word& g) const {
  return conjugate(apply(base_, conjugate(g, invert(alpha_))), alpha_);
}

ConjugatedRetraction conjugate_retraction(const GeneratorMap& r, const Word& alpha) {
  return ConjugatedRetraction(r, alpha);
}

Verification verify_retraction(const CoxeterMatrix& m, const GeneratorMap& r) {
  if (!(r.source() == m)) return {false, std::nullopt, "map source differs from the matrix"};
  for (const auto& g : m.generators()) {
    const auto& img = r(g);
    if (r.target().count(g) && img != g)
      return {false, std::pair{g, g}, "target generator " + g + " is not fixed"};
    if (img && !r.target().count(*img))
      return {false, std::pair{g, g}, "image of " + g + " is outside X ∪ {1}"};
  }

  const auto& gens = m.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Label mst = m.label(i, j);
      if (mst.is_infinite()) continue;
      const auto& s = gens[i];
      const auto& t = gens[j];
      const auto& u = r(s);
      const auto& v = r(t);
      const std::int64_t len = mst.value();
      if (u == v) continue;
      if (!u || !v) {
        // Π(1, v, m) = v^{⌊m/2⌋} and Π(v, 1, m) = v^{⌈m/2⌉}.
        if (len % 2 == 1)
          return {false, std::pair{s, t},
                  "odd label " + mst.to_string() + " with " + (u ? t : s) + " sent to 1"};
        continue;
      }
      const Label muv = m.label(*u, *v);
      const dihedral::Presentation p(muv, std::min(*u, *v), std::max(*u, *v));
      if (!dihedral::words_equal(p, pi_word(*u, *v, len), pi_word(*v, *u, len)))
        return {false, std::pair{s, t},
                "Π(" + describe(u) + "," + describe(v) + "," + mst.to_string() + ") fails in A(" +
                    muv.to_string() + ")"};
    }
  return {};
}

}  // namespace artin::retraction
