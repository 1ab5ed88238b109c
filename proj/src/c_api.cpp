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


#include "artin/artin.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/classifier.hpp"
#include "artin/coxeter.hpp"
#include "artin/dihedral.hpp"
#include "artin/dihedral_hom.hpp"
#include "artin/error.hpp"
#include "artin/free_product.hpp"
#include "artin/retraction.hpp"
#include "artin/word.hpp"

using json = nlohmann::json;

struct artin_matrix {
  artin::CoxeterMatrix matrix;
};

struct artin_retraction {
  artin::retraction::GeneratorMap map;
  artin::retraction::RetractionTrace trace;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
artin_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const artin::ParseError& e) {
    g_last_error = e.what();
    return ARTIN_ERR_PARSE;
  } catch (const artin::InvalidArgument& e) {
    g_last_error = e.what();
    return ARTIN_ERR_INVALID_ARGUMENT;
  } catch (const artin::PreconditionError& e) {
    g_last_error = e.what();
    return ARTIN_ERR_PRECONDITION;
  } catch (const artin::InternalError& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return ARTIN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return ARTIN_ERR_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw artin::InvalidArgument(std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  require(out, "out");
  *out = dup_string(j.dump());
}

json label_json(artin::Label l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

std::vector<std::string> split_names(const char* gens) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = gens; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (*p != ' ') {
      cur.push_back(*p);
    }
  }
  out.push_back(cur);
  return out;
}

artin::dihedral::Presentation presentation(const char* m, const char* gens) {
  require(m, "m");
  const artin::Label label = artin::Label::parse(m);
  if (gens == nullptr) return artin::dihedral::Presentation(label);
  const auto names = split_names(gens);
  if (names.size() != 2)
    throw artin::InvalidArgument("expected two comma-separated generator names, got '" +
                                 std::string(gens) + "'");
  return artin::dihedral::Presentation(label, names[0], names[1]);
}

json certificate_json(const artin::classifier::TripleVerdict& v) {
  json labels = json::array();
  for (auto l : v.labels) labels.push_back(label_json(l));
  return {{"rule", artin::classifier::to_string(*v.failure)},
          {"triple", {v.triple[0], v.triple[1], v.triple[2]}},
          {"labels", labels}};
}

json image_json(const artin::retraction::GeneratorMap::Image& img) {
  return img ? json(*img) : json("1");
}

json vertex_json(const artin::fp::Vertex& v) {
  return {{"factor", v.factor}, {"rep", artin::fp::format_fp_word(v.rep)}};
}

json family_json(const artin::hom::HomFamily& f) {
  json params = json::array();
  for (auto s : f.params) params.push_back(artin::hom::to_string(s));
  return {{"case", f.case_id},
          {"params", params},
          {"constraints", f.constraints},
          {"image", f.image_formula}};
}

json params_json(const artin::hom::HomParams& p) {
  json out = json::object();
  if (p.t) out["t"] = *p.t;
  if (p.t1) out["t1"] = *p.t1;
  if (p.t2) out["t2"] = *p.t2;
  if (p.beta) out["beta"] = artin::format_word(*p.beta);
  if (p.element) out["element"] = artin::format_word(*p.element);
  return out;
}

artin::hom::HomCandidate candidate(const char* ma, const char* mb, const char* image) {
  require(ma, "ma");
  require(mb, "mb");
  require(image, "image");
  return {artin::Label::parse(ma), artin::Label::parse(mb),
          artin::Word::generator(artin::hom::kTargetGen1, 1), artin::parse_word(image)};
}

}  // namespace

extern "C" {

const char* artin_version(void) { return "1.0.0"; }

const char* artin_status_name(artin_status status) {
  switch (status) {
    case ARTIN_OK: return "ok";
    case ARTIN_NEGATIVE: return "negative";
    case ARTIN_ERR_PARSE: return "parse error";
    case ARTIN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARTIN_ERR_PRECONDITION: return "precondition violated";
    case ARTIN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* artin_last_error(void) { return g_last_error.c_str(); }

void artin_string_free(char* s) { std::free(s); }

artin_status artin_matrix_parse(const char* text, artin_matrix** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    *out = new artin_matrix{artin::parse_coxeter(text)};
    return ARTIN_OK;
  });
}

void artin_matrix_free(artin_matrix* m) { delete m; }

artin_status artin_matrix_to_json(const artin_matrix* m, char** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(artin::to_json(m->matrix));
    return ARTIN_OK;
  });
}

artin_status artin_matrix_rank(const artin_matrix* m, size_t* out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    *out = m->matrix.rank();
    return ARTIN_OK;
  });
}

artin_status artin_classify(const artin_matrix* m, char** out_json) {
  return guard([&] {
    require(m, "matrix");
    const auto report = artin::classifier::is_parabolic_retract_compatible(m->matrix);
    if (const auto* ok = std::get_if<artin::classifier::Compatible>(&report)) {
      json cross = json::array();
      for (const auto& [blocks, label] : ok->cross_labels)
        cross.push_back({{"blocks", {blocks.first, blocks.second}}, {"label", label_json(label)}});
      emit({{"compatible", true}, {"partition", ok->partition.blocks}, {"cross_labels", cross}},
           out_json);
      return ARTIN_OK;
    }
    const auto& bad = std::get<artin::classifier::Incompatible>(report);
    emit({{"compatible", false}, {"certificate", certificate_json(bad.first_violation)}},
         out_json);
    return ARTIN_NEGATIVE;
  });
}

artin_status artin_triples_criterion(const artin_matrix* m) {
  return guard([&] {
    require(m, "matrix");
    return artin::classifier::triples_criterion(m->matrix) ? ARTIN_OK : ARTIN_NEGATIVE;
  });
}

artin_status artin_retraction_synth(const artin_matrix* m, const char* const* keep,
                                    size_t keep_count, artin_retraction** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    if (keep_count > 0) require(keep, "keep");
    std::set<artin::GeneratorId> kept;
    for (size_t i = 0; i < keep_count; ++i) {
      require(keep[i], "keep entry");
      kept.insert(keep[i]);
    }
    auto [map, trace] = artin::retraction::synth_retraction(m->matrix, kept);
    *out = new artin_retraction{std::move(map), std::move(trace)};
    return ARTIN_OK;
  });
}

void artin_retraction_free(artin_retraction* r) { delete r; }

artin_status artin_retraction_to_json(const artin_retraction* r, int with_trace, char** out_json) {
  return guard([&] {
    require(r, "retraction");
    json map = json::object();
    for (const auto& [g, img] : r->map.assignment()) map[g] = image_json(img);
    json out = {{"map", map}, {"target", r->map.target()}};
    if (with_trace) {
      json steps = json::array();
      for (const auto& s : r->trace.steps) {
        json step = {{"removed", s.removed}, {"rule", artin::retraction::to_string(s.rule)}};
        step["target"] = image_json(s.target);
        steps.push_back(step);
      }
      out["trace"] = steps;
    }
    emit(out, out_json);
    return ARTIN_OK;
  });
}

artin_status artin_retraction_apply(const artin_retraction* r, const char* word, char** out_word) {
  return guard([&] {
    require(r, "retraction");
    require(word, "word");
    require(out_word, "out");
    *out_word = dup_string(
        artin::format_word(artin::retraction::apply(r->map, artin::parse_word(word))));
    return ARTIN_OK;
  });
}

artin_status artin_retraction_verify(const artin_retraction* r, char** out_json) {
  return guard([&] {
    require(r, "retraction");
    const auto v = artin::retraction::verify_retraction(r->map.source(), r->map);
    json out = {{"verified", v.verified}};
    if (!v.verified) {
      out["reason"] = v.reason;
      if (v.pair) out["pair"] = {v.pair->first, v.pair->second};
    }
    if (out_json) emit(out, out_json);
    return v.verified ? ARTIN_OK : ARTIN_NEGATIVE;
  });
}

artin_status artin_word_reduce(const char* word, char** out_word) {
  return guard([&] {
    require(word, "word");
    require(out_word, "out");
    *out_word = dup_string(artin::format_word(artin::free_reduce(artin::parse_word(word))));
    return ARTIN_OK;
  });
}

artin_status artin_word_normal_form(const char* m, const char* gens, const char* word,
                                    char** out_json) {
  return guard([&] {
    require(word, "word");
    const auto p = presentation(m, gens);
    const auto nf = artin::dihedral::normal_form(p, artin::parse_word(word));
    json out = {{"m", p.m().to_string()},
                {"word", artin::format_word(artin::dihedral::to_word(p, nf))}};
    if (const auto* g = std::get_if<artin::dihedral::GarsideNormalForm>(&nf)) {
      json factors = json::array();
      for (const auto& s : g->factors)
        factors.push_back({{"first", p.name(s.first)}, {"length", s.length}});
      out["kind"] = "garside";
      out["delta_power"] = g->delta_power;
      out["factors"] = factors;
    } else if (const auto* e = std::get_if<artin::dihedral::ExponentPair>(&nf)) {
      out["kind"] = "exponents";
      out["exponents"] = {{p.gen1(), e->first}, {p.gen2(), e->second}};
    } else {
      out["kind"] = "free";
    }
    emit(out, out_json);
    return ARTIN_OK;
  });
}

artin_status artin_word_equal(const char* m, const char* gens, const char* u, const char* v) {
  return guard([&] {
    require(u, "u");
    require(v, "v");
    const auto p = presentation(m, gens);
    return artin::dihedral::words_equal(p, artin::parse_word(u), artin::parse_word(v))
               ? ARTIN_OK
               : ARTIN_NEGATIVE;
  });
}

artin_status artin_word_abelianize(const char* word, int per_generator, char** out_json) {
  return guard([&] {
    require(word, "word");
    const auto w = artin::parse_word(word);
    json out = json::object();
    if (per_generator) {
      const auto img = artin::abelianize(w, artin::Grading::PerGenerator);
      out = {{"grading", "per_generator"}, {"coordinates", img.coordinates}};
    } else {
      const auto img = artin::abelianize(w, artin::Grading::TotalSum);
      out = {{"grading", "total"}, {"total", img.total()}};
    }
    emit(out, out_json);
    return ARTIN_OK;
  });
}

artin_status artin_tree_classify(const char* orders, const char* word, char** out_json) {
  return guard([&] {
    require(orders, "orders");
    require(word, "word");
    const auto sig = artin::fp::parse_signature(orders);
    const auto w = artin::fp::parse_fp_word(word, sig);
    const auto action = artin::fp::classify_action(w);
    json out = {{"word", artin::fp::format_fp_word(w)}};
    if (const auto* e = std::get_if<artin::fp::Elliptic>(&action)) {
      out["type"] = "elliptic";
      out["translation_length"] = 0;
      out["fixed_vertex"] = vertex_json(e->fixed_vertex);
    } else {
      const auto& h = std::get<artin::fp::Hyperbolic>(action);
      json axis = json::array();
      for (const auto& v : h.axis_sample) axis.push_back(vertex_json(v));
      out["type"] = "hyperbolic";
      out["translation_length"] = h.translation_length;
      out["axis"] = axis;
    }
    emit(out, out_json);
    return ARTIN_OK;
  });
}

artin_status artin_hom_list(const char* ma, const char* mb, char** out_json) {
  return guard([&] {
    require(ma, "ma");
    require(mb, "mb");
    const auto mA = artin::Label::parse(ma);
    const auto mB = artin::Label::parse(mb);
    json families = json::array();
    for (const auto& f : artin::hom::enumerate_cases(mA, mB)) families.push_back(family_json(f));
    emit({{"ma", mA.to_string()}, {"mb", mB.to_string()}, {"families", families}}, out_json);
    return ARTIN_OK;
  });
}

artin_status artin_hom_verify(const char* ma, const char* mb, const char* image, char** out_json) {
  return guard([&] {
    const auto c = candidate(ma, mb, image);
    const bool ok = artin::hom::verify_hom(c);
    if (out_json)
      emit({{"homomorphism", ok}, {"image", artin::format_word(c.image_a2)}}, out_json);
    return ok ? ARTIN_OK : ARTIN_NEGATIVE;
  });
}

artin_status artin_hom_classify(const char* ma, const char* mb, const char* image, int bound,
                                char** out_json) {
  return guard([&] {
    const auto c = candidate(ma, mb, image);
    if (bound < 0) throw artin::InvalidArgument("bound must be non-negative");
    if (!artin::hom::verify_hom(c)) {
      emit({{"homomorphism", false}, {"matched", false}}, out_json);
      return ARTIN_NEGATIVE;
    }
    const auto result = artin::hom::classify_image(c, bound);
    if (const auto* m = std::get_if<artin::hom::Matched>(&result)) {
      emit({{"homomorphism", true},
            {"matched", true},
            {"family", family_json(m->family)},
            {"params", params_json(m->params)}},
           out_json);
      return ARTIN_OK;
    }
    emit({{"homomorphism", true}, {"matched", false}, {"bound", bound}}, out_json);
    return ARTIN_NEGATIVE;
  });
}

artin_status artin_gen_retract(size_t n, uint64_t seed, char** out_json) {
  return guard([&] {
    require(out_json, "out");
    *out_json = dup_string(artin::to_json(artin::classifier::gen_retract_compatible(n, seed)));
    return ARTIN_OK;
  });
}

artin_status artin_gen_parabolic(const size_t* block_sizes, size_t block_count, uint64_t seed,
                                 const char* cross, char** out_json) {
  return guard([&] {
    require(out_json, "out");
    if (block_count > 0) require(block_sizes, "block_sizes");
    std::vector<std::size_t> sizes(block_sizes, block_sizes + block_count);
    std::optional<artin::Label> label;
    if (cross) label = artin::Label::parse(cross);
    *out_json = dup_string(
        artin::to_json(artin::classifier::gen_parabolic_retractable(sizes, seed, label)));
    return ARTIN_OK;
  });
}

}  // extern "C"
