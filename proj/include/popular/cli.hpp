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

// Command-line driver. Every verb prints one JSON document on stdout; logs go
// to stderr. Exit codes: 0 popular (or success), 2 no popular solution, 3
// structurally infeasible, 1 error document.

#ifndef POPULAR_CLI_HPP_
#define POPULAR_CLI_HPP_

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "popular/error.hpp"
#include "popular/generators.hpp"
#include "popular/instance.hpp"
#include "popular/instance_io.hpp"
#include "popular/oracle.hpp"
#include "popular/reductions.hpp"
#include "popular/solver.hpp"

namespace popular {

inline constexpr int kExitPopular = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoPopular = 2;
inline constexpr int kExitInfeasible = 3;

inline int ExitCodeFor(Status s) {
  switch (s) {
    case Status::kPopular: return kExitPopular;
    case Status::kNoPopular: return kExitNoPopular;
    case Status::kStructurallyInfeasible: return kExitInfeasible;
  }
  return kExitError;
}

inline Json ErrorDocument(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

namespace internal {

inline ElementSet IdSet(const Instance& inst, const std::vector<int>& ids) {
  for (int e : ids) {
    if (e < 0 || e >= inst.NumElements()) {
      throw Error(ErrorCode::kOutOfRange, "element id " + std::to_string(e) +
                                              " out of range");
    }
  }
  return ElementSet::FromVector(inst.NumElements(), ids);
}

inline PreferenceModel ModelFromName(const std::string& name) {
  if (name == "weak") return PreferenceModel::kWeak;
  if (name == "partial") return PreferenceModel::kPartial;
  if (name == "mixed") return PreferenceModel::kMixed;
  throw Error(ErrorCode::kSchema, "unknown preference model " + name);
}

inline InstanceKind KindFromName(const std::string& name) {
  if (name == "arborescence") return InstanceKind::kArborescence;
  if (name == "colorful_forest") return InstanceKind::kColorfulForest;
  if (name == "generic") return InstanceKind::kGeneric;
  throw Error(ErrorCode::kSchema, "unknown instance kind " + name);
}

// Document produced by `gen`.
inline Json Generate(const Json& spec) {
  const std::string kind = AsString(Field(spec, "kind"), "generator kind");
  if (kind == "appendix_fixture") {
    return InstanceToJson(NamedFixture(AsString(Field(spec, "name"), "name")));
  }
  if (kind == "random") {
    RandomSpec r;
    r.seed = spec.value("seed", std::uint64_t{0});
    r.kind = KindFromName(spec.value("instance_kind", std::string("arborescence")));
    r.agents = spec.value("agents", r.agents);
    r.vertices = spec.value("vertices", r.vertices);
    r.max_edges = spec.value("max_edges", r.max_edges);
    r.edge_prob = spec.value("edge_prob", r.edge_prob);
    r.preferences = ModelFromName(spec.value("preferences", std::string("mixed")));
    r.weak_levels = spec.value("weak_levels", r.weak_levels);
    r.partial_density = spec.value("partial_density", r.partial_density);
    r.root_last = spec.value("root_last", r.root_last);
    r.root_prob = spec.value("root_prob", r.root_prob);
    r.mutual_pairs = spec.value("mutual_pairs", r.mutual_pairs);
    if (r.agents < 1 || r.max_edges < 1) {
      throw Error(ErrorCode::kSchema, "agents and max_edges must be positive");
    }
    return InstanceToJson(RandomInstance(r));
  }
  if (kind == "vertex_cover_gadget") {
    UndirectedGraph h;
    for (const Json& v : Field(spec, "vertices")) h.vertices.push_back(AsString(v, "vertex"));
    for (const Json& e : Field(spec, "edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kSchema, "graph edges are [u, v] pairs");
      }
      h.edges.push_back({AsString(e[0], "vertex"), AsString(e[1], "vertex")});
    }
    CostedInstance c = VertexCoverGadget(h);
    return {{"instance", InstanceToJson(c.instance)},
            {"costs", CostsToJson(c.costs).at("costs")}};
  }
  if (kind == "exact_3cover_gadget") {
    std::vector<std::string> universe;
    for (const Json& u : Field(spec, "universe")) universe.push_back(AsString(u, "element"));
    std::vector<std::vector<std::string>> sets;
    for (const Json& s : Field(spec, "sets")) {
      std::vector<std::string> names;
      for (const Json& u : s) names.push_back(AsString(u, "element"));
      sets.push_back(names);
    }
    GadgetWithCandidate g =
        ExactCoverGadget(universe, sets, AsIntList(Field(spec, "cover"), "cover"));
    return {{"instance", InstanceToJson(g.instance)},
            {"candidate", SolutionToJson(g.instance, g.candidate)}};
  }
  throw Error(ErrorCode::kSchema, "unknown generator kind " + kind);
}

// Solve output and solution documents both work as `verify` inputs.
inline const Json& SolutionPart(const Json& doc) {
  if (doc.contains("solution")) {
    if (doc.at("solution").is_null()) {
      throw Error(ErrorCode::kSchema, "document carries no solution");
    }
    return doc.at("solution");
  }
  return doc;
}

}  // namespace internal

inline int RunCli(int argc, const char* const* argv, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Popular arborescences and popular common bases"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the output");

  std::string instance_path;
  std::string second_path;
  bool trace = false;
  std::vector<int> forced;
  std::vector<int> forbidden;
  std::vector<int> window;
  std::string categories_path;
  std::string costs_path;
  std::string solution_path;

  CLI::App* solve = app.add_subcommand("solve", "Find a popular solution or a proof that none exists");
  solve->add_option("instance", instance_path)->required();
  solve->add_flag("--trace", trace, "Attach the chain evolution");
  solve->add_option("--forced", forced, "Element ids that must be used")->delimiter(',');
  solve->add_option("--forbidden", forbidden, "Element ids that must not be used")->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "Check a solution against its certificate");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("solution", second_path)->required();

  CLI::App* margin = app.add_subcommand("margin", "Unpopularity margin of a solution");
  margin->add_option("instance", instance_path)->required();
  margin->add_option("solution", second_path)->required();

  CLI::App* classify = app.add_subcommand("classify", "Membership of every element in popular solutions");
  classify->add_option("instance", instance_path)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "Emit the auxiliary common-base instance");
  reduce->add_option("instance", instance_path)->required();
  reduce->add_option("--window", window, "Size bounds lo,hi")->delimiter(',')->expected(2);
  reduce->add_option("--categories", categories_path, "Category bounds file");

  CLI::App* mincost = app.add_subcommand("mincost-forest", "Cheapest popular colorful forest");
  mincost->add_option("instance", instance_path)->required();
  mincost->add_option("costs", costs_path)->required();

  CLI::App* brute = app.add_subcommand("brute", "Exhaustive enumeration at desk scale");
  brute->add_option("instance", instance_path)->required();
  brute->add_option("--costs", costs_path, "Also report the cheapest popular solution");
  brute->add_option("--solution", solution_path, "Also report the margin of this solution");

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance from a generator spec");
  gen->add_option("spec", instance_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << ErrorDocument("usage", e.what()).dump() << "\n";
    return kExitError;
  }

  auto emit = [&](const Json& doc) {
    out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
  };

  try {
    if (*gen) {
      emit(internal::Generate(ReadJsonFile(instance_path)));
      return kExitPopular;
    }

    const Instance inst = InstanceFromJson(ReadJsonFile(instance_path));

    if (*solve) {
      ReducedSolve r = SolveAny(inst, internal::IdSet(inst, forced),
                                internal::IdSet(inst, forbidden));
      const Instance& base = r.reduced ? r.reduced->instance : inst;
      Json doc;
      doc["status"] = StatusName(r.result.status);
      doc["solution"] = r.projected ? SolutionToJson(inst, *r.projected) : Json(nullptr);
      doc["certificate"] = ChainToJson(r.result.certificate);
      doc["certificate_instance"] = r.reduced ? "auxiliary" : "input";
      if (r.result.solution) {
        DualSolution dual = ExtractDual(base, *r.result.solution, r.result.certificate);
        doc["dual"] = DualToJson(base, r.result.certificate, dual);
      }
      if (!r.result.reason.empty()) doc["reason"] = r.result.reason;
      if (trace) doc["trace"] = TraceToJson(r.result.trace);
      if (r.result.chain_pruned && r.result.status == Status::kPopular) {
        err << "popular: final chain had " << r.result.trace.final_chain.size()
            << " sets, certificate keeps " << r.result.certificate.size() << "\n";
      }
      emit(doc);
      return ExitCodeFor(r.result.status);
    }

    if (*verify) {
      const Json doc = ReadJsonFile(second_path);
      Solution sol = SolutionFromJson(inst, internal::SolutionPart(doc));
      Json result;
      if (!IsFeasible(inst, sol.elements)) {
        result = {{"valid", false}, {"reason", "solution is not feasible"}};
        emit(result);
        return kExitNoPopular;
      }
      if (doc.contains("certificate")) {
        const bool aux = doc.value("certificate_instance", std::string("input")) == "auxiliary";
        std::optional<Reduced> reduced;
        if (aux) reduced = ReduceToBase(inst);
        const Instance& base = aux ? reduced->instance : inst;
        Solution checked = aux ? Lift(inst, base, reduced->map, sol) : sol;
        Chain chain = ChainFromJson(base, doc.at("certificate"));
        CertificateCheck check = VerifyCertificate(base, checked, chain);
        result["valid"] = check.valid;
        if (!check.valid) result["reason"] = check.reason;
        if (check.valid) {
          DualSolution dual = ExtractDual(base, checked, chain);
          result["objective"] = dual.objective;
          result["rows_hold"] = dual.rows_hold;
        }
      } else {
        std::int64_t mu = PopularityMargin(inst, sol);
        result["valid"] = mu == 0;
        result["margin"] = mu;
        if (mu != 0) result["reason"] = "a competitor wins by " + std::to_string(mu);
      }
      emit(result);
      return result.at("valid").get<bool>() ? kExitPopular : kExitNoPopular;
    }

    if (*margin) {
      Solution sol = SolutionFromJson(inst, internal::SolutionPart(ReadJsonFile(second_path)));
      emit({{"margin", PopularityMargin(inst, sol)}});
      return kExitPopular;
    }

    if (*classify) {
      ReducedSolve whole = SolveAny(inst);
      Json doc;
      doc["status"] = StatusName(whole.result.status);
      Json edges = Json::array();
      if (whole.result.status == Status::kPopular) {
        for (int e = 0; e < inst.NumElements(); ++e) {
          ElementSet single = inst.EmptySet().With(e);
          EdgeClass c = EdgeClass::kInSomePopular;
          if (SolveAny(inst, single, inst.EmptySet()).result.status != Status::kPopular) {
            c = EdgeClass::kInNoPopular;
          } else if (SolveAny(inst, inst.EmptySet(), single).result.status !=
                     Status::kPopular) {
            c = EdgeClass::kInAllPopular;
          }
          edges.push_back({{"id", e}, {"edge", inst.Label(e)}, {"class", EdgeClassName(c)}});
        }
      }
      doc["edges"] = edges;
      emit(doc);
      return ExitCodeFor(whole.result.status);
    }

    if (*reduce) {
      Reduced r = [&] {
        if (!categories_path.empty()) {
          const Json spec = ReadJsonFile(categories_path);
          std::vector<std::vector<int>> cats;
          std::vector<std::pair<int, int>> bounds;
          for (const Json& c : internal::Field(spec, "categories")) {
            std::vector<int> members;
            for (const Json& a : internal::Field(c, "agents")) {
              int idx = inst.AgentIndex(internal::ColorString(a));
              if (idx < 0) throw Error(ErrorCode::kSchema, "unknown agent in category");
              members.push_back(idx);
            }
            cats.push_back(members);
            bounds.push_back({internal::AsInt(internal::Field(c, "lo"), "lo"),
                              internal::AsInt(internal::Field(c, "hi"), "hi")});
          }
          return WithCategories(inst, cats, bounds);
        }
        if (!window.empty()) return WithSizeWindow(inst, window[0], window[1]);
        if (inst.BaseSemantics()) {
          throw Error(ErrorCode::kSchema, "instance already has base semantics");
        }
        return ReduceToBase(inst);
      }();
      emit({{"instance", InstanceToJson(r.instance)},
            {"sidecar", ReductionMapToJson(inst, r.instance, r.map)}});
      return kExitPopular;
    }

    if (*mincost) {
      CostMap costs = CostsFromJson(inst, ReadJsonFile(costs_path));
      MinCostResult r = MinCostPopularColorfulForest(inst, costs);
      Json doc;
      doc["status"] = StatusName(r.status);
      doc["forest"] = r.forest ? SolutionToJson(inst, *r.forest) : Json(nullptr);
      doc["cost"] = r.forest ? RationalToJson(r.cost) : Json(nullptr);
      doc["certificate"] = ChainToJson(r.certificate);
      if (!r.reason.empty()) doc["reason"] = r.reason;
      emit(doc);
      return ExitCodeFor(r.status);
    }

    if (*brute) {
      std::vector<Solution> all = EnumerateFeasible(inst);
      std::vector<Solution> pop = BrutePopular(inst, all);
      Json doc;
      doc["feasible"] = all.size();
      Json list = Json::array();
      for (const Solution& s : pop) list.push_back(SolutionToJson(inst, s));
      doc["popular"] = list;
      if (!all.empty()) {
        int best = -1;
        const Solution* pick = nullptr;
        for (const Solution& s : all) {
          int mu = BruteMargin(inst, s, all);
          if (best < 0 || mu < best) {
            best = mu;
            pick = &s;
          }
        }
        doc["min_margin"] = {{"margin", best}, {"solution", SolutionToJson(inst, *pick)}};
      }
      if (!solution_path.empty()) {
        Solution sol = SolutionFromJson(
            inst, internal::SolutionPart(ReadJsonFile(solution_path)));
        doc["margin"] = BruteMargin(inst, sol, all);
      }
      if (!costs_path.empty()) {
        auto pick = BruteMinCostPopular(inst, CostsFromJson(inst, ReadJsonFile(costs_path)));
        doc["min_cost"] = pick ? Json{{"cost", RationalToJson(pick->cost)},
                                      {"solution", SolutionToJson(inst, pick->solution)}}
                               : Json(nullptr);
      }
      emit(doc);
      if (all.empty()) return kExitInfeasible;
      return pop.empty() ? kExitNoPopular : kExitPopular;
    }
  } catch (const Error& e) {
    err << "popular: " << e.what() << "\n";
    emit(ErrorDocument(ErrorCodeName(e.code()), e.what()));
    return kExitError;
  } catch (const Json::exception& e) {
    err << "popular: " << e.what() << "\n";
    emit(ErrorDocument("schema", e.what()));
    return kExitError;
  }
  return kExitError;
}

}  // namespace popular

#endif  // POPULAR_CLI_HPP_
