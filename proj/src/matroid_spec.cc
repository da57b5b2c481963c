// Copyright 2026 The Authors.
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

#include "geolat/matroid_spec.h"

#include <fstream>

namespace geolat {
namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) {
    throw InputError(std::string("matroid spec lacks \"") + name + "\"");
  }
  return doc.at(name);
}

}  // namespace

Matroid matroid_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) throw InputError("matroid spec must be a JSON object");
  try {
    const std::string kind = field(doc, "kind").get<std::string>();
    if (kind == "uniform") {
      return make_uniform(field(doc, "rank").get<int>(),
                          field(doc, "elements").get<int>(), limits);
    }
    if (kind == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw InputError("graphic edge must be a pair of vertices");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return make_graphic(field(doc, "vertices").get<int>(), edges, limits);
    }
    if (kind == "linear") {
      return make_linear(
          field(doc, "prime").get<int>(),
          field(doc, "vectors").get<std::vector<std::vector<int>>>(), limits);
    }
    if (kind == "flats") {
      const int n = field(doc, "ground").get<int>();
      if (n < 1 || n > kMaxGroundSize) {
        throw InputError("ground size " + std::to_string(n) + " out of range");
      }
      std::vector<AtomSet> flats;
      for (const auto& f : field(doc, "flats")) {
        AtomSet s;
        for (int a : f.get<std::vector<int>>()) {
          if (a < 1 || a > n) {
            throw InputError("atom " + std::to_string(a) + " outside 1.." +
                             std::to_string(n));
          }
          s = s.with(a);
        }
        flats.push_back(s);
      }
      return make_from_flats(n, flats, limits);
    }
    throw InputError("unknown matroid kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matroid spec: ") + e.what());
  }
}

Matroid load_matroid_spec(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return matroid_from_json(doc, limits);
}

json matroid_to_json(const Matroid& m) {
  struct Visitor {
    const Matroid& m;
    json operator()(const UniformSource& s) const {
      return {{"kind", "uniform"}, {"rank", s.rank}, {"elements", m.size()}};
    }
    json operator()(const GraphicSource& s) const {
      json edges = json::array();
      for (auto [a, b] : s.edges) edges.push_back({a, b});
      return {{"kind", "graphic"}, {"vertices", s.vertices}, {"edges", edges}};
    }
    json operator()(const LinearSource& s) const {
      return {{"kind", "linear"}, {"prime", s.prime}, {"vectors", s.vectors}};
    }
    json operator()(const FlatsSource& s) const {
      json flats = json::array();
      for (AtomSet f : s.flats) flats.push_back(f.atoms());
      return {{"kind", "flats"}, {"ground", m.size()}, {"flats", flats}};
    }
  };
  return std::visit(Visitor{m}, m.source());
}

}  // namespace geolat
