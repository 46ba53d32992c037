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

// JSON encodings.
//
// Instance:
//   {"kind": "arborescence" | "colorful_forest" | "generic",
//    "vertices": [name, ...], "root": name,            (root optional)
//    "agents": [name, ...],                            (optional)
//    "edges": [{"id": 0, "tail": name, "head": name, "color": name}, ...],
//    "preferences": {agent: {"ranks": [[id, ...], ...]}
//                         | {"dominates": [[better, worse], ...]}},
//    "matroid": descriptor}                            (optional)
// Edge ids must be exactly 0..m-1. Elements may omit tail and head when a
// matroid descriptor is given. Colors may be strings or integers.
//
// Matroid descriptors, relative to an ordered element list (the whole
// instance at top level):
//   {"type": "graphic"}   cycle matroid of the listed edges
//   {"type": "free"} | {"type": "uniform", "rank": k}
//   {"type": "partition", "classes": [[local, ...]], "capacities": [k, ...]}
//   {"type": "truncation", "limit": k, "inner": descriptor}
//   {"type": "direct_sum", "parts": [{"elements": [local, ...],
//                                     "matroid": descriptor}, ...]}
//
// Solution: {"elements": [id, ...], "assignment": {agent: id | null}}.
// Costs: {"costs": {id: number | "inf" | "p/q"}}; missing ids cost 0.

#ifndef POPULAR_INSTANCE_IO_HPP_
#define POPULAR_INSTANCE_IO_HPP_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "popular/error.hpp"
#include "popular/instance.hpp"
#include "popular/matroid.hpp"
#include "popular/reductions.hpp"
#include "popular/solver.hpp"

namespace popular {

using Json = nlohmann::json;

namespace internal {

inline const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kSchema, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

inline std::string AsString(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  throw Error(ErrorCode::kSchema, std::string(what) + " must be a string");
}

inline int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::kSchema, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

inline std::vector<int> AsIntList(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kSchema, std::string(what) + " must be a list");
  }
  std::vector<int> out;
  for (const Json& x : j) out.push_back(AsInt(x, what));
  return out;
}

inline MatroidPtr ParseMatroid(
    const Json& d, const std::vector<int>& elements,
    const std::vector<std::pair<int, int>>& endpoints, int num_vertices) {
  const std::string type = AsString(Field(d, "type"), "matroid type");
  const int size = static_cast<int>(elements.size());
  auto local_list = [&](const Json& j, const char* what) {
    std::vector<int> ids = AsIntList(j, what);
    for (int x : ids) {
      if (x < 0 || x >= size) {
        throw Error(ErrorCode::kOutOfRange,
                    std::string(what) + " entry out of range");
      }
    }
    return ids;
  };
  if (type == "graphic") {
    std::vector<std::pair<int, int>> ends;
    for (int e : elements) {
      if (endpoints[e].first < 0) {
        throw Error(ErrorCode::kSchema, "graphic element " + std::to_string(e) +
                                            " has no endpoints");
      }
      ends.push_back(endpoints[e]);
    }
    return std::make_shared<GraphicMatroid>(num_vertices, std::move(ends));
  }
  if (type == "free") return MakeFree(size);
  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(size,
                                            AsInt(Field(d, "rank"), "rank"));
  }
  if (type == "partition") {
    std::vector<int> class_of(size, -1);
    const Json& classes = Field(d, "classes");
    if (!classes.is_array()) throw Error(ErrorCode::kSchema, "classes must be a list");
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int x : local_list(classes[c], "class")) {
        if (class_of[x] != -1) throw Error(ErrorCode::kSchema, "classes overlap");
        class_of[x] = static_cast<int>(c);
      }
    }
    for (int c : class_of) {
      if (c == -1) throw Error(ErrorCode::kSchema, "classes must cover the part");
    }
    std::vector<int> caps = AsIntList(Field(d, "capacities"), "capacities");
    if (caps.size() != classes.size()) {
      throw Error(ErrorCode::kSchema, "one capacity per class");
    }
    return std::make_shared<PartitionMatroid>(std::move(class_of), std::move(caps));
  }
  if (type == "truncation") {
    return Truncate(ParseMatroid(Field(d, "inner"), elements, endpoints,
                                 num_vertices),
                    AsInt(Field(d, "limit"), "limit"));
  }
  if (type == "direct_sum") {
    std::vector<DirectSumMatroid::Part> parts;
    const Json& list = Field(d, "parts");
    if (!list.is_array()) throw Error(ErrorCode::kSchema, "parts must be a list");
    for (const Json& part : list) {
      std::vector<int> local = local_list(Field(part, "elements"), "part elements");
      std::vector<int> global;
      for (int x : local) global.push_back(elements[x]);
      parts.push_back({ParseMatroid(Field(part, "matroid"), global, endpoints,
                                    num_vertices),
                       local});
    }
    return std::make_shared<DirectSumMatroid>(size, std::move(parts));
  }
  throw Error(ErrorCode::kSchema, "unsupported matroid type " + type);
}

inline std::string ColorString(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::kSchema, "color must be a string or an integer");
}

}  // namespace internal

inline Instance InstanceFromJson(const Json& doc) {
  using internal::Field;
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "instance must be an object");
  const std::string kind_name = internal::AsString(Field(doc, "kind"), "kind");
  InstanceKind kind;
  if (kind_name == "arborescence") {
    kind = InstanceKind::kArborescence;
  } else if (kind_name == "colorful_forest") {
    kind = InstanceKind::kColorfulForest;
  } else if (kind_name == "generic") {
    kind = InstanceKind::kGeneric;
  } else {
    throw Error(ErrorCode::kSchema, "unknown kind " + kind_name);
  }
  InstanceBuilder b(kind);
  std::map<std::string, int> vertex_index;
  if (doc.contains("vertices")) {
    for (const Json& v : Field(doc, "vertices")) {
      std::string name = internal::AsString(v, "vertex");
      b.AddVertex(name);
      vertex_index[name] = static_cast<int>(vertex_index.size());
    }
  }
  if (doc.contains("root") && !doc.at("root").is_null()) {
    b.SetRoot(internal::AsString(doc.at("root"), "root"));
  }
  if (doc.contains("agents")) {
    for (const Json& a : Field(doc, "agents")) {
      b.AddAgent(internal::ColorString(a));
    }
  }

  const Json& edges = Field(doc, "edges");
  if (!edges.is_array()) throw Error(ErrorCode::kSchema, "edges must be a list");
  std::vector<const Json*> by_id(edges.size(), nullptr);
  for (const Json& e : edges) {
    int id = internal::AsInt(Field(e, "id"), "edge id");
    if (id < 0 || id >= static_cast<int>(edges.size())) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge id " + std::to_string(id) + " outside 0..m-1");
    }
    if (by_id[id]) {
      throw Error(ErrorCode::kSchema, "duplicate edge id " + std::to_string(id));
    }
    by_id[id] = &e;
  }
  std::vector<std::pair<int, int>> endpoints;
  for (const Json* e : by_id) {
    std::optional<std::string> color;
    if (e->contains("color") && !e->at("color").is_null()) {
      color = internal::ColorString(e->at("color"));
    }
    bool has_tail = e->contains("tail");
    bool has_head = e->contains("head");
    if (has_tail != has_head) {
      throw Error(ErrorCode::kSchema, "edge needs both tail and head");
    }
    if (has_tail) {
      std::string tail = internal::AsString(e->at("tail"), "tail");
      std::string head = internal::AsString(e->at("head"), "head");
      b.AddEdge(tail, head, color);
      if (!vertex_index.count(tail) || !vertex_index.count(head)) {
        throw Error(ErrorCode::kSchema, "edge endpoint is not a vertex");
      }
      endpoints.push_back({vertex_index[tail], vertex_index[head]});
    } else {
      if (!color) throw Error(ErrorCode::kSchema, "element without endpoints needs a color");
      b.AddElement(*color);
      endpoints.push_back({-1, -1});
    }
  }

  if (doc.contains("preferences")) {
    const Json& prefs = doc.at("preferences");
    if (!prefs.is_object()) {
      throw Error(ErrorCode::kSchema, "preferences must be an object");
    }
    for (const auto& [agent, spec] : prefs.items()) {
      if (!spec.is_object()) {
        throw Error(ErrorCode::kSchema, "preferences of " + agent + " must be an object");
      }
      const bool ranks = spec.contains("ranks");
      const bool dominates = spec.contains("dominates");
      if (ranks == dominates) {
        throw Error(ErrorCode::kSchema,
                    "preferences of " + agent +
                        " need exactly one of \"ranks\" or \"dominates\"");
      }
      if (ranks) {
        std::vector<std::vector<int>> groups;
        for (const Json& g : spec.at("ranks")) {
          groups.push_back(internal::AsIntList(g, "rank group"));
        }
        b.SetRanks(agent, groups);
      } else {
        for (const Json& pair : spec.at("dominates")) {
          std::vector<int> p = internal::AsIntList(pair, "dominance pair");
          if (p.size() != 2) {
            throw Error(ErrorCode::kSchema, "dominance pairs have two ids");
          }
          b.AddDominance(agent, p[0], p[1]);
        }
      }
    }
  }

  if (doc.contains("matroid") && !doc.at("matroid").is_null()) {
    std::vector<int> all(by_id.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    b.SetMatroid(internal::ParseMatroid(doc.at("matroid"), all, endpoints,
                                        static_cast<int>(vertex_index.size())));
  }
  return b.Build();
}

// Groups of a weak ranking, best first.
inline std::vector<std::vector<int>> RankGroups(const Instance& inst, int agent) {
  std::map<int, std::vector<int>> by_count;
  for (int e : inst.ClassOf(agent)) {
    int better = 0;
    for (int f : inst.ClassOf(agent)) better += inst.Prefers(f, e) ? 1 : 0;
    by_count[better].push_back(e);
  }
  std::vector<std::vector<int>> groups;
  for (auto& [count, ids] : by_count) groups.push_back(ids);
  return groups;
}

inline Json InstanceToJson(const Instance& inst) {
  Json doc;
  doc["kind"] = KindName(inst.kind());
  doc["vertices"] = inst.vertices();
  if (inst.root()) doc["root"] = *inst.root();
  if (inst.kind() != InstanceKind::kArborescence) doc["agents"] = inst.agents();
  Json edges = Json::array();
  for (const Edge& e : inst.edges()) {
    Json j;
    j["id"] = e.id;
    if (e.HasEndpoints()) {
      j["tail"] = e.tail;
      j["head"] = e.head;
    }
    if (e.color) j["color"] = *e.color;
    edges.push_back(j);
  }
  doc["edges"] = edges;
  Json prefs = Json::object();
  for (int a = 0; a < inst.NumAgents(); ++a) {
    if (inst.IsWeakRanking(a)) {
      prefs[inst.agents()[a]] = {{"ranks", RankGroups(inst, a)}};
      continue;
    }
    Json pairs = Json::array();
    for (int e : inst.ClassOf(a)) {
      inst.WorseThan(e).ForEach([&](int f) { pairs.push_back({e, f}); });
    }
    prefs[inst.agents()[a]] = {{"dominates", pairs}};
  }
  doc["preferences"] = prefs;
  if (inst.custom_matroid()) doc["matroid"] = inst.matroid()->Describe();
  return doc;
}

inline Json SetToJson(const ElementSet& s) { return s.ToVector(); }

inline Json ChainToJson(const Chain& chain) {
  Json out = Json::array();
  for (const ElementSet& s : chain) out.push_back(SetToJson(s));
  return out;
}

inline Chain ChainFromJson(const Instance& inst, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kSchema, "chain must be a list");
  Chain chain;
  for (const Json& s : j) {
    std::vector<int> ids = internal::AsIntList(s, "chain set");
    for (int e : ids) {
      if (e < 0 || e >= inst.NumElements()) {
        throw Error(ErrorCode::kOutOfRange, "chain element out of range");
      }
    }
    chain.push_back(ElementSet::FromVector(inst.NumElements(), ids));
  }
  return chain;
}

inline Json SolutionToJson(const Instance& inst, const Solution& sol) {
  Json assignment = Json::object();
  for (int a = 0; a < inst.NumAgents(); ++a) {
    if (sol.assignment[a] == -1) {
      assignment[inst.agents()[a]] = nullptr;
    } else {
      assignment[inst.agents()[a]] = sol.assignment[a];
    }
  }
  return {{"elements", SetToJson(sol.elements)}, {"assignment", assignment}};
}

inline Solution SolutionFromJson(const Instance& inst, const Json& doc) {
  Solution sol = MakeSolution(
      inst, internal::AsIntList(internal::Field(doc, "elements"), "elements"));
  if (doc.contains("assignment")) {
    for (const auto& [agent, value] : doc.at("assignment").items()) {
      int a = inst.AgentIndex(agent);
      if (a < 0) throw Error(ErrorCode::kSchema, "assignment names unknown agent " + agent);
      int held = value.is_null() ? -1 : internal::AsInt(value, "assignment");
      if (held != sol.assignment[a]) {
        throw Error(ErrorCode::kSchema,
                    "assignment of " + agent + " disagrees with the elements");
      }
    }
  }
  return sol;
}

inline Json TraceToJson(const SolveTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    Json deficient = nullptr;
    if (step.deficient > 0) deficient = step.deficient;
    steps.push_back({{"chain", ChainToJson(step.chain)},
                     {"I", SetToJson(step.chosen)},
                     {"deficient", deficient}});
  }
  return steps;
}

inline Json DualToJson(const Instance& inst, const Chain& chain,
                       const DualSolution& dual) {
  Json alpha = Json::object();
  for (int a = 0; a < inst.NumAgents(); ++a) alpha[inst.agents()[a]] = dual.alpha[a];
  return {{"chain", ChainToJson(chain)},
          {"y", dual.y},
          {"alpha", alpha},
          {"objective", dual.objective},
          {"rows_hold", dual.rows_hold}};
}

// Rationals from JSON numbers use the shortest decimal form of the value.
inline Rational RationalFromString(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kSchema, "cannot read \"" + text + "\" as a rational");
  };
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    auto r1 = std::from_chars(text.data(), text.data() + slash, p);
    auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), q);
    if (r1.ec != std::errc() || r1.ptr != text.data() + slash ||
        r2.ec != std::errc() || r2.ptr != text.data() + text.size() || q == 0) {
      return fail();
    }
    return Rational(p, q);
  }
  std::string mantissa = text;
  int exponent = 0;
  std::size_t epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    exponent = std::stoi(text.substr(epos + 1));
  }
  bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (negative) mantissa = mantissa.substr(1);
  std::size_t dot = mantissa.find('.');
  std::string digits = mantissa;
  if (dot != std::string::npos) {
    exponent -= static_cast<int>(mantissa.size() - dot - 1);
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
  }
  if (digits.empty() || digits.size() > 18 || exponent > 18 || exponent < -18) {
    return fail();
  }
  std::int64_t value = 0;
  auto r = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (r.ec != std::errc() || r.ptr != digits.data() + digits.size()) return fail();
  std::int64_t scale = 1;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
  Rational out = exponent < 0 ? Rational(value, scale) : Rational(value * scale);
  return negative ? -out : out;
}

inline Cost CostFromJson(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return {true, 0};
    return {false, RationalFromString(s)};
  }
  if (j.is_number_integer()) return {false, Rational(j.get<std::int64_t>())};
  if (j.is_number_float()) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), j.get<double>());
    return {false, RationalFromString(std::string(buf, r.ptr))};
  }
  throw Error(ErrorCode::kSchema, "cost must be a number, \"inf\" or \"p/q\"");
}

inline Json RationalToJson(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline CostMap CostsFromJson(const Instance& inst, const Json& doc) {
  CostMap costs(inst.NumElements());
  const Json& map = internal::Field(doc, "costs");
  if (!map.is_object()) throw Error(ErrorCode::kSchema, "costs must be an object");
  for (const auto& [key, value] : map.items()) {
    int id = -1;
    auto r = std::from_chars(key.data(), key.data() + key.size(), id);
    if (r.ec != std::errc() || r.ptr != key.data() + key.size() || id < 0 ||
        id >= inst.NumElements()) {
      throw Error(ErrorCode::kOutOfRange, "cost for unknown element " + key);
    }
    costs[id] = CostFromJson(value);
  }
  return costs;
}

inline Json CostsToJson(const CostMap& costs) {
  Json map = Json::object();
  for (std::size_t e = 0; e < costs.size(); ++e) {
    map[std::to_string(e)] = costs[e].infinite ? Json("inf") : RationalToJson(costs[e].value);
  }
  return {{"costs", map}};
}

inline Json ReductionMapToJson(const Instance& original, const Instance& aux,
                               const ReductionMap& map) {
  Json dummies = Json::object();
  for (int a = 0; a < original.NumAgents(); ++a) {
    if (map.dummies[a] >= 0) dummies[original.agents()[a]] = map.dummies[a];
  }
  Json forward = Json::object();
  for (std::size_t e = 0; e < map.forward.size(); ++e) {
    forward[std::to_string(e)] = map.forward[e];
  }
  Json doc = {{"dummies", dummies}, {"map", forward}};
  if (!map.categories.empty()) {
    Json cats = Json::array();
    for (std::size_t k = 0; k < map.categories.size(); ++k) {
      Json names = Json::array();
      for (int a : map.categories[k]) names.push_back(original.agents()[a]);
      Json extra = Json::array();
      for (int d : map.category_dummy_agents[k]) {
        const auto& [f, g] = map.dummy_agent_elements[d];
        extra.push_back({{"agent", aux.agents()[aux.AgentOf(f)]},
                         {"elements", {f, g}}});
      }
      cats.push_back({{"agents", names},
                      {"bounds", {map.bounds[k].first, map.bounds[k].second}},
                      {"dummy_agents", extra}});
    }
    doc["categories"] = cats;
  }
  return doc;
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSchema, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchema, path + ": " + e.what());
  }
}

inline std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace popular

#endif  // POPULAR_INSTANCE_IO_HPP_
