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


// Command-line front end. Everything goes through the C API in artin.h.
//
// Exit status: 0 on success or a positive verdict, 1 on a negative verdict,
// 2 on usage, parse or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/artin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

bool g_pretty = false;

struct UsageError {
  std::string message;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open '" + path + "'"};
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_json(const std::string& text) {
  if (g_pretty)
    std::cout << nlohmann::json::parse(text).dump(2) << "\n";
  else
    std::cout << text << "\n";
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(g_pretty ? 2 : -1) << "\n"; }

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  artin_string_free(s);
  return out;
}

// Maps a status to an exit code, reporting errors on stderr.
int finish(artin_status st) {
  switch (st) {
    case ARTIN_OK: return kExitOk;
    case ARTIN_NEGATIVE: return kExitNegative;
    default:
      std::cerr << "error: " << artin_status_name(st) << ": " << artin_last_error() << "\n";
      return kExitUsage;
  }
}

// Emits `out` (if any) and converts the status.
int report(artin_status st, char*& out) {
  if (st == ARTIN_OK || st == ARTIN_NEGATIVE) print_json(take(out));
  return finish(st);
}

using MatrixPtr = std::unique_ptr<artin_matrix, decltype(&artin_matrix_free)>;

MatrixPtr load_matrix(const std::string& path) {
  artin_matrix* m = nullptr;
  const artin_status st = artin_matrix_parse(read_input(path).c_str(), &m);
  if (st != ARTIN_OK)
    throw UsageError{path + ": " + artin_status_name(st) + ": " + artin_last_error()};
  return MatrixPtr(m, &artin_matrix_free);
}

using RetractionPtr = std::unique_ptr<artin_retraction, decltype(&artin_retraction_free)>;

// Synthesizes a retraction, or prints the incompatibility certificate and
// returns null with `exit_code` set.
RetractionPtr synthesize(const artin_matrix* m, const std::string& keep_csv, int& exit_code) {
  char* verdict = nullptr;
  const artin_status cls = artin_classify(m, &verdict);
  if (cls != ARTIN_OK) {
    exit_code = report(cls, verdict);
    return RetractionPtr(nullptr, &artin_retraction_free);
  }
  artin_string_free(verdict);
  const auto keep = split_csv(keep_csv);
  std::vector<const char*> ptrs;
  for (const auto& k : keep) ptrs.push_back(k.c_str());
  artin_retraction* r = nullptr;
  const artin_status st = artin_retraction_synth(m, ptrs.data(), ptrs.size(), &r);
  if (st != ARTIN_OK) {
    exit_code = finish(st);
    return RetractionPtr(nullptr, &artin_retraction_free);
  }
  return RetractionPtr(r, &artin_retraction_free);
}

const char* gens_or_null(const std::string& gens) { return gens.empty() ? nullptr : gens.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retractions and parabolic subgroups of Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "Indent JSON output");

  std::function<int()> action;

  // classify
  std::string matrix_path;
  auto* classify = app.add_subcommand("classify", "Decide parabolic-retract-compatibility");
  classify->add_option("matrix", matrix_path, "Matrix JSON file, '-' for stdin")->required();
  classify->callback([&] {
    action = [&] {
      auto m = load_matrix(matrix_path);
      char* out = nullptr;
      return report(artin_classify(m.get(), &out), out);
    };
  });

  // synth
  std::string keep;
  bool trace = false;
  auto* synth = app.add_subcommand("synth", "Synthesize a retraction onto a parabolic subgroup");
  synth->add_option("matrix", matrix_path, "Matrix JSON file, '-' for stdin")->required();
  synth->add_option("--keep", keep, "Comma-separated generators to keep")->required();
  synth->add_flag("--trace", trace, "Include the elimination steps");
  synth->callback([&] {
    action = [&] {
      auto m = load_matrix(matrix_path);
      int code = kExitOk;
      auto r = synthesize(m.get(), keep, code);
      if (!r) return code;
      char* out = nullptr;
      return report(artin_retraction_to_json(r.get(), trace ? 1 : 0, &out), out);
    };
  });

  // apply
  std::string word;
  auto* apply = app.add_subcommand("apply", "Apply the synthesized retraction to a word");
  apply->add_option("matrix", matrix_path, "Matrix JSON file, '-' for stdin")->required();
  apply->add_option("word", word, "Word over the matrix generators")->required();
  apply->add_option("--keep", keep, "Comma-separated generators to keep")->required();
  apply->callback([&] {
    action = [&] {
      auto m = load_matrix(matrix_path);
      int code = kExitOk;
      auto r = synthesize(m.get(), keep, code);
      if (!r) return code;
      char* out = nullptr;
      const artin_status st = artin_retraction_apply(r.get(), word.c_str(), &out);
      if (st != ARTIN_OK) return finish(st);
      print_json(nlohmann::json{{"word", word}, {"image", take(out)}});
      return kExitOk;
    };
  });

  // word ...
  std::string m_label;
  std::string gens;
  std::string other;
  bool per_generator = false;
  auto* word_cmd = app.add_subcommand("word", "Word computations in dihedral Artin groups");
  word_cmd->require_subcommand(1);
  auto add_group_opts = [&](CLI::App* sub) {
    sub->add_option("--m", m_label, "Label m (integer >= 2 or inf)")->required();
    sub->add_option("--gens", gens, "Generator names, default a,b");
  };
  auto* nf = word_cmd->add_subcommand("nf", "Garside normal form");
  add_group_opts(nf);
  nf->add_option("word", word)->required();
  nf->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(
          artin_word_normal_form(m_label.c_str(), gens_or_null(gens), word.c_str(), &out), out);
    };
  });
  auto* eq = word_cmd->add_subcommand("eq", "Decide equality of two words");
  add_group_opts(eq);
  eq->add_option("u", word)->required();
  eq->add_option("v", other)->required();
  eq->callback([&] {
    action = [&] {
      const artin_status st =
          artin_word_equal(m_label.c_str(), gens_or_null(gens), word.c_str(), other.c_str());
      if (st == ARTIN_OK || st == ARTIN_NEGATIVE)
        print_json(nlohmann::json{{"equal", st == ARTIN_OK}});
      return finish(st);
    };
  });
  auto* reduce = word_cmd->add_subcommand("reduce", "Free reduction");
  reduce->add_option("word", word)->required();
  reduce->callback([&] {
    action = [&] {
      char* out = nullptr;
      const artin_status st = artin_word_reduce(word.c_str(), &out);
      if (st != ARTIN_OK) return finish(st);
      print_json(nlohmann::json{{"word", take(out)}});
      return kExitOk;
    };
  });
  auto* abelianize = word_cmd->add_subcommand("abelianize", "Exponent sums");
  abelianize->add_option("word", word)->required();
  abelianize->add_flag("--per-generator", per_generator, "One coordinate per generator");
  abelianize->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_word_abelianize(word.c_str(), per_generator ? 1 : 0, &out), out);
    };
  });

  // tree classify
  std::string orders;
  auto* tree = app.add_subcommand("tree", "Bass-Serre tree of a free product of cyclic groups");
  tree->require_subcommand(1);
  auto* tree_classify = tree->add_subcommand("classify", "Elliptic or hyperbolic action");
  tree_classify->add_option("--orders", orders, "Factor orders, e.g. 2,3 or inf,4")->required();
  tree_classify->add_option("word", word, "Word in x (factor 1) and y (factor 2)")->required();
  tree_classify->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_tree_classify(orders.c_str(), word.c_str(), &out), out);
    };
  });

  // hom ...
  std::string ma;
  std::string mb;
  int bound = 4;
  auto* hom = app.add_subcommand("hom", "Homomorphisms A(m_A) -> B(m_B) with a1 -> b1");
  hom->require_subcommand(1);
  auto add_labels = [&](CLI::App* sub) {
    sub->add_option("--ma", ma, "Label of the source group")->required();
    sub->add_option("--mb", mb, "Label of the target group")->required();
  };
  auto* hom_list = hom->add_subcommand("list", "Families of images of a2");
  add_labels(hom_list);
  hom_list->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_hom_list(ma.c_str(), mb.c_str(), &out), out);
    };
  });
  auto* hom_verify = hom->add_subcommand("verify", "Check that a2 -> image defines a homomorphism");
  add_labels(hom_verify);
  hom_verify->add_option("--image", word, "Image of a2 over b1, b2")->required();
  hom_verify->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_hom_verify(ma.c_str(), mb.c_str(), word.c_str(), &out), out);
    };
  });
  auto* hom_classify = hom->add_subcommand("classify", "Match an image against the families");
  add_labels(hom_classify);
  hom_classify->add_option("--image", word, "Image of a2 over b1, b2")->required();
  hom_classify->add_option("--bound", bound, "Conjugator search bound")->check(CLI::NonNegativeNumber);
  hom_classify->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_hom_classify(ma.c_str(), mb.c_str(), word.c_str(), bound, &out), out);
    };
  });

  // gen ...
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string blocks;
  std::string cross;
  auto* gen = app.add_subcommand("gen", "Seeded instance generators");
  gen->require_subcommand(1);
  auto* gen_retract = gen->add_subcommand("retract", "Retract-compatible odd matrix");
  gen_retract->add_option("--n", n, "Rank")->required();
  gen_retract->add_option("--seed", seed, "Random seed");
  gen_retract->callback([&] {
    action = [&] {
      char* out = nullptr;
      return report(artin_gen_retract(n, seed, &out), out);
    };
  });
  auto* gen_parabolic = gen->add_subcommand("parabolic", "Parabolic-retract-compatible matrix");
  gen_parabolic->add_option("--blocks", blocks, "Comma-separated block sizes")->required();
  gen_parabolic->add_option("--seed", seed, "Random seed");
  gen_parabolic->add_option("--cross", cross, "Label used between every pair of blocks");
  gen_parabolic->callback([&] {
    action = [&] {
      std::vector<std::size_t> sizes;
      for (const auto& b : split_csv(blocks)) {
        try {
          std::size_t pos = 0;
          const long long v = std::stoll(b, &pos);
          if (pos != b.size() || v < 0) throw std::invalid_argument(b);
          sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
          throw UsageError{"--blocks: '" + b + "' is not a block size"};
        }
      }
      char* out = nullptr;
      return report(artin_gen_parabolic(sizes.data(), sizes.size(), seed,
                                        cross.empty() ? nullptr : cross.c_str(), &out),
                    out);
    };
  });

  // Name an unknown subcommand instead of reporting a missing one.
  for (int i = 1; i < argc; ++i) {
    const std::string tok = argv[i];
    if (tok.rfind("-", 0) == 0) continue;
    if (app.get_subcommand_no_throw(tok) == nullptr) {
      std::cerr << "error: unknown subcommand '" << tok << "'\n";
      return kExitUsage;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
