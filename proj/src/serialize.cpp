// Copyright 2026 The bubblecalc Authors
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

#include "bubblecalc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace bubblecalc {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw FormatError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw FormatError(where + " must be a list of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw FormatError(where + " must be a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

TreeVertex vertex_from_json(const Json& j, const std::string& where) {
  TreeVertex v;
  v.color = int_field(j, "color", where);
  v.labels = int_list(field(j, "labels", where), where + ".labels");
  if (j.contains("children")) {
    const Json& ch = j.at("children");
    if (!ch.is_array()) throw FormatError(where + ".children must be a list");
    for (std::size_t i = 0; i < ch.size(); ++i) {
      v.children.push_back(vertex_from_json(ch[i], where + ".children[" + std::to_string(i) + "]"));
    }
  }
  return v;
}

std::string perm_field(const Permutation& p) {
  std::string s;
  for (int x : p.one_based()) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back({{"exp", it->first}, {"coeff", rational_to_string(it->second)}});
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be a list of {exp, coeff} records");
  LaurentPoly p;
  for (const auto& rec : j) {
    const Json& c = field(rec, "coeff", "polynomial term");
    if (!c.is_string()) throw FormatError("polynomial term: coeff must be a rational string");
    p.add_term(int_field(rec, "exp", "polynomial term"), parse_rational(c.get<std::string>()));
  }
  return p;
}

Json to_json(const RationalFunc& f) { return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

RationalFunc rational_func_from_json(const Json& j) {
  return RationalFunc(laurent_from_json(field(j, "num", "rational function")),
                      laurent_from_json(field(j, "den", "rational function")));
}

Json to_json(const LeadingTerm& t) { return {{"exp", t.exponent}, {"coeff", rational_to_string(t.coefficient)}}; }

Json to_json(const Bubble& b) {
  Json colors = Json::object();
  for (int c = 1; c <= b.d(); ++c) colors[std::to_string(c)] = b.color(c).one_based();
  return {{"d", b.d()}, {"n", b.n()}, {"colors", colors}};
}

Bubble bubble_from_json(const Json& j) {
  const int d = int_field(j, "d", "bubble");
  const int n = int_field(j, "n", "bubble");
  const Json& colors = field(j, "colors", "bubble");
  if (!colors.is_object()) throw FormatError("bubble: \"colors\" must be an object keyed by color");
  std::vector<std::vector<int>> raw;
  for (int c = 1; c <= d; ++c) {
    const std::string key = std::to_string(c);
    if (!colors.contains(key)) throw FormatError("bubble: colors has no entry \"" + key + "\"");
    raw.push_back(int_list(colors.at(key), "bubble: colors[\"" + key + "\"]"));
  }
  if (static_cast<int>(colors.size()) != d) {
    throw FormatError("bubble: colors has " + std::to_string(colors.size()) + " entries, expected d = " + std::to_string(d));
  }
  auto report = validate(d, n, raw);
  if (!report.ok()) throw BubbleValidationError(std::move(report));
  std::vector<Permutation> maps;
  for (const auto& r : raw) maps.push_back(Permutation::from_one_based(r));
  return Bubble(std::move(maps));
}

Json to_json(const TreeVertex& v) {
  Json children = Json::array();
  for (const auto& c : v.children) children.push_back(to_json(c));
  return {{"color", v.color}, {"labels", v.labels}, {"children", children}};
}

CornerLabeledTree tree_from_json(const Json& j) {
  CornerLabeledTree t{vertex_from_json(j, "root")};
  if (auto w = tree_violation(t); !w.empty()) throw FormatError("invalid tree: " + w);
  return t;
}

Json to_json(const PowerSumExpansion& e) {
  Json out = Json::array();
  for (const auto& [powers, c] : e.terms) out.push_back({{"powers", powers}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const ExpectationResult& r) {
  return {{"raw", to_json(r.raw)},
          {"alpha", r.alpha},
          {"scaled", to_json(r.scaled)},
          {"leading", to_json(leading_term(r.scaled))}};
}

Json to_json(const Estimate& e) {
  return {{"mean", e.mean}, {"stderr", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

Json to_json(const WeingartenTable& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    out.push_back({{"partition", t.classes.classes[i].parts}, {"value", to_json(t.values[i])}});
  }
  return out;
}

std::string diagnostics_csv(const std::vector<ScalingDiagnostics>& rows, const ColorSplit& split) {
  std::ostringstream os;
  os << "sigma,tau";
  for (int c : split.row_colors()) os << ",F" << c;
  os << ",Fbox,F0,exponent\n";
  for (const auto& r : rows) {
    os << perm_field(r.sigma) << ',' << perm_field(r.tau);
    for (int f : r.row_faces) os << ',' << f;
    os << ',' << r.f_box << ',' << r.f0 << ',' << r.exponent << '\n';
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace bubblecalc
