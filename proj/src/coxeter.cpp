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


#include "artin/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <json.hpp>

#include "artin/error.hpp"

namespace artin {

namespace {

using json = nlohmann::json;

// Union-find over generator positions.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

Label label_from_json(const json& m, const std::string& where) {
  if (m.is_string()) {
    if (m.get<std::string>() == "inf") return Label::infinity();
    throw InvalidArgument(where + ": \"m\" must be an integer >= 2 or \"inf\"");
  }
  if (m.is_number_unsigned() || m.is_number_integer()) {
    const auto v = m.get<std::int64_t>();
    if (v < 2) throw InvalidArgument(where + ": label " + std::to_string(v) + " is below 2");
    if (v > 0xFFFFFFFFLL) throw InvalidArgument(where + ": label too large");
    return Label::finite(static_cast<std::uint32_t>(v));
  }
  throw InvalidArgument(where + ": \"m\" must be an integer >= 2 or \"inf\"");
}

}  // namespace

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
}

Label Label::finite(std::uint32_t m) {
  if (m < 2) throw InvalidArgument("Coxeter label must be >= 2, got " + std::to_string(m));
  return Label(m);
}

std::uint32_t Label::value() const {
  if (is_infinite()) throw InvalidArgument("infinite label has no integer value");
  return value_;
}

std::string Label::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Label Label::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("invalid label '" + std::string(text) + "' (expected integer >= 2 or inf)");
  if (v < 2) throw InvalidArgument("Coxeter label must be >= 2, got " + std::string(text));
  return Label(v);
}

CoxeterMatrix::CoxeterMatrix(
    std::vector<GeneratorId> generators,
    const std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>>& labels)
    : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!is_valid_generator_name(g)) throw InvalidArgument("invalid generator name '" + g + "'");
    if (!index_.emplace(g, i).second) throw InvalidArgument("duplicate generator '" + g + "'");
  }
  const std::size_t n = generators_.size();
  upper_.assign(n < 2 ? 0 : n * (n - 1) / 2, Label::infinity());
  std::vector<bool> seen(upper_.size(), false);
  for (const auto& [pair, label] : labels) {
    const auto& [a, b] = pair;
    if (a == b) throw InvalidArgument("self-pair (" + a + "," + b + ") is not allowed");
    const std::size_t s = slot(index_of(a), index_of(b));
    if (seen[s]) throw InvalidArgument("duplicate pair (" + a + "," + b + ")");
    seen[s] = true;
    upper_[s] = label;
  }
}

bool CoxeterMatrix::contains(std::string_view g) const { return index_.find(g) != index_.end(); }

std::size_t CoxeterMatrix::index_of(std::string_view g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw InvalidArgument("unknown generator '" + std::string(g) + "'");
  return it->second;
}

std::size_t CoxeterMatrix::slot(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = generators_.size();
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) slots.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Label CoxeterMatrix::label(std::size_t i, std::size_t j) const {
  if (i == j) throw InvalidArgument("diagonal entries are not labels");
  if (i >= rank() || j >= rank()) throw InvalidArgument("generator index out of range");
  return upper_[slot(i, j)];
}

Label CoxeterMatrix::label(std::string_view a, std::string_view b) const {
  return label(index_of(a), index_of(b));
}

CoxeterMatrix parse_coxeter(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("missing array \"generators\"");

  std::vector<GeneratorId> gens;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const auto& g = doc["generators"][i];
    if (!g.is_string()) throw ParseError("generators[" + std::to_string(i) + "] is not a string");
    gens.push_back(g.get<std::string>());
  }

  std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>> labels;
  if (doc.contains("labels")) {
    const auto& arr = doc["labels"];
    if (!arr.is_array()) throw ParseError("\"labels\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "labels[" + std::to_string(i) + "]";
      const auto& entry = arr[i];
      if (!entry.is_object() || !entry.contains("pair") || !entry.contains("m"))
        throw ParseError(where + ": expected {\"pair\": [g, h], \"m\": ...}");
      const auto& pair = entry["pair"];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw ParseError(where + ": \"pair\" must hold two generator names");
      auto a = pair[0].get<std::string>();
      auto b = pair[1].get<std::string>();
      Label m = label_from_json(entry["m"], where);
      labels.push_back({{std::move(a), std::move(b)}, m});
    }
  }
  try {
    return CoxeterMatrix(std::move(gens), labels);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("invalid Coxeter matrix: ") + e.what());
  }
}

std::string to_json(const CoxeterMatrix& m) {
  json doc;
  doc["generators"] = m.generators();
  std::vector<std::pair<GeneratorId, GeneratorId>> pairs;
  const auto& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (m.label(i, j).is_finite()) pairs.emplace_back(std::min(g[i], g[j]), std::max(g[i], g[j]));
  std::sort(pairs.begin(), pairs.end());
  json labels = json::array();
  for (const auto& [a, b] : pairs)
    labels.push_back({{"pair", {a, b}}, {"m", m.label(a, b).value()}});
  doc["labels"] = std::move(labels);
  return doc.dump();
}

CoxeterMatrix submatrix(const CoxeterMatrix& m, const std::set<GeneratorId>& subset) {
  for (const auto& g : subset) m.index_of(g);
  std::vector<GeneratorId> gens;
  for (const auto& g : m.generators())
    if (subset.count(g)) gens.push_back(g);
  std::vector<std::pair<std::pair<GeneratorId, GeneratorId>, Label>> labels;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Label l = m.label(gens[i], gens[j]);
      if (l.is_finite()) labels.push_back({{gens[i], gens[j]}, l});
    }
  return CoxeterMatrix(std::move(gens), labels);
}

OddComponentPartition odd_components(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.label(i, j).is_odd()) sets.join(i, j);

  std::map<std::size_t, std::vector<GeneratorId>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[sets.find(i)].push_back(m.generators()[i]);

  OddComponentPartition out;
  for (auto& [root, block] : by_root) {
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (const auto& g : out.blocks[b]) out.block_index[g] = b;
  return out;
}

}  // namespace artin
