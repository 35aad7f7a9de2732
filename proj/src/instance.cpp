#include "simdel/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "simdel/error.hpp"

namespace simdel {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Eliminating: return "eliminating";
    case ProblemKind::ReducingTotal: return "reducing-total";
    case ProblemKind::ReducingMax: return "reducing-max";
  }
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "eliminating" || name == "es") return ProblemKind::Eliminating;
  if (name == "reducing-total" || name == "rts") return ProblemKind::ReducingTotal;
  if (name == "reducing-max" || name == "rms") return ProblemKind::ReducingMax;
  throw InputError("unknown problem kind '" + std::string(name) + "'");
}

bool ProblemInstance::is_candidate(const Edge& e) const noexcept {
  const Edge c = make_edge(e.u, e.v);
  if (all_candidates) return graph.has_edge(c);
  return std::binary_search(candidates.begin(), candidates.end(), c);
}

ProblemInstance make_instance(ProblemKind kind, Graph graph, std::vector<VertexPair> targets,
                              std::optional<std::vector<Edge>> candidates, std::size_t budget,
                              std::optional<std::size_t> threshold) {
  ProblemInstance inst;
  inst.kind = kind;
  for (auto& p : targets) p = make_edge(p.u, p.v);
  inst.targets = std::move(targets);
  if (candidates) {
    inst.candidates = canonical_edge_set(std::move(*candidates));
  } else {
    inst.all_candidates = true;
    inst.candidates.assign(graph.edges().begin(), graph.edges().end());
  }
  inst.graph = std::move(graph);
  inst.budget = budget;
  inst.threshold = threshold;
  return inst;
}

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::vector<std::string> validate(const ProblemInstance& inst) {
  std::vector<std::string> errors;
  const auto n = inst.graph.n();

  std::unordered_set<Edge, EdgeHash> seen;
  for (const auto& p : inst.targets) {
    if (p.u == p.v) {
      errors.push_back("degenerate pair " + pair_text(p));
    } else if (p.u >= n || p.v >= n) {
      errors.push_back("target pair " + pair_text(p) + " out of range");
    } else if (!seen.insert(p).second) {
      errors.push_back("duplicate target pair " + pair_text(p));
    }
  }

  if (inst.all_candidates) {
    if (!std::ranges::equal(inst.candidates, inst.graph.edges())) {
      errors.push_back("candidate list out of sync with \"all\" shorthand");
    }
  } else {
    for (const auto& e : inst.candidates) {
      if (!inst.graph.has_edge(e)) errors.push_back("candidate not an edge " + pair_text(e));
    }
  }

  if (inst.kind == ProblemKind::Eliminating && inst.threshold) {
    errors.push_back("eliminating instance carries a threshold");
  }
  if (inst.kind != ProblemKind::Eliminating && !inst.threshold) {
    errors.push_back(std::string(to_string(inst.kind)) + " instance requires a threshold");
  }
  return errors;
}

void require_valid(const ProblemInstance& inst) {
  auto errors = validate(inst);
  if (!errors.empty()) throw InputError("invalid instance: " + errors.front());
}

std::size_t Solution::total_residual() const noexcept {
  std::size_t sum = 0;
  for (auto r : residual) sum += r;
  return sum;
}

std::size_t Solution::max_residual() const noexcept {
  std::size_t best = 0;
  for (auto r : residual) best = std::max(best, r);
  return best;
}

std::vector<std::size_t> residual_common_neighbors(const ProblemInstance& inst,
                                                   std::span<const Edge> deleted) {
  std::vector<Edge> gone(deleted.begin(), deleted.end());
  if (!std::is_sorted(gone.begin(), gone.end())) gone = canonical_edge_set(std::move(gone));
  auto is_gone = [&](Vertex a, Vertex b) {
    return std::binary_search(gone.begin(), gone.end(), make_edge(a, b));
  };

  std::vector<std::size_t> residual;
  residual.reserve(inst.targets.size());
  for (const auto& p : inst.targets) {
    std::size_t count = 0;
    for (Vertex w : inst.graph.common_neighbors(p.u, p.v)) {
      if (!is_gone(w, p.u) && !is_gone(w, p.v)) ++count;
    }
    residual.push_back(count);
  }
  return residual;
}

Solution check_solution(const ProblemInstance& inst, std::span<const Edge> deleted) {
  Solution sol;
  sol.deleted = canonical_edge_set({deleted.begin(), deleted.end()});
  for (const auto& e : sol.deleted) {
    if (!inst.graph.has_edge(e)) throw InputError("deleted edge " + pair_text(e) + " is not in E");
    if (!inst.is_candidate(e)) throw InputError("deleted edge " + pair_text(e) + " is not in C");
  }
  sol.residual = residual_common_neighbors(inst, sol.deleted);

  bool condition = false;
  switch (inst.kind) {
    case ProblemKind::Eliminating:
      condition = sol.total_residual() == 0;
      break;
    case ProblemKind::ReducingTotal:
      condition = sol.total_residual() <= inst.threshold.value_or(0);
      break;
    case ProblemKind::ReducingMax:
      condition = sol.max_residual() <= inst.threshold.value_or(0);
      break;
  }
  sol.feasible = condition && sol.deleted.size() <= inst.budget;
  return sol;
}

ProblemInstance lift_es(const ProblemInstance& inst, ProblemKind target_kind) {
  if (inst.kind != ProblemKind::Eliminating) {
    throw InputError("lift_es expects an eliminating instance");
  }
  if (target_kind == ProblemKind::Eliminating) {
    throw InputError("lift_es target must be reducing-total or reducing-max");
  }
  ProblemInstance out = inst;
  out.kind = target_kind;
  out.threshold = 0;
  return out;
}

namespace {

Vertex read_id(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InputError("vertex id must be a non-negative integer, got " + j.dump());
  }
  return static_cast<Vertex>(j.get<std::int64_t>());
}

std::vector<Edge> read_pairs(const json& j, const char* field,
                             const std::unordered_map<std::uint64_t, Vertex>* relabel) {
  if (!j.is_array()) throw InputError(std::string(field) + " must be an array of pairs");
  std::vector<Edge> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw InputError(std::string(field) + " entries must be two-element arrays");
    }
    Vertex a = read_id(item[0]);
    Vertex b = read_id(item[1]);
    if (relabel != nullptr) {
      auto ia = relabel->find(a);
      auto ib = relabel->find(b);
      if (ia == relabel->end() || ib == relabel->end()) {
        throw InputError(std::string(field) + " references a label absent from the edge list");
      }
      a = ia->second;
      b = ib->second;
    }
    out.push_back(make_edge(a, b));
  }
  return out;
}

std::size_t read_count(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InputError(std::string(field) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

}  // namespace

ProblemInstance read_instance(std::istream& in, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  for (const char* field : {"kind", "budget", "graph", "targets"}) {
    if (!doc.contains(field)) throw InputError(std::string("instance is missing \"") + field + "\"");
  }

  const auto kind = parse_problem_kind(doc.at("kind").get<std::string>());
  const auto& g = doc.at("graph");

  Graph graph;
  std::unordered_map<std::uint64_t, Vertex> relabel;
  bool labeled = false;
  if (g.contains("edge_list")) {
    const auto path = base_dir / g.at("edge_list").get<std::string>();
    std::ifstream file(path);
    if (!file) throw InputError("cannot open edge list " + path.string());
    auto parsed = parse_edge_list(file);
    for (std::size_t i = 0; i < parsed.labels.size(); ++i) {
      relabel.emplace(parsed.labels[i], static_cast<Vertex>(i));
    }
    graph = std::move(parsed.graph);
    labeled = true;
  } else {
    if (!g.contains("n") || !g.contains("edges")) {
      throw InputError("inline graph needs \"n\" and \"edges\"");
    }
    graph = Graph(read_count(g.at("n"), "graph.n"), read_pairs(g.at("edges"), "graph.edges", nullptr));
  }
  const auto* map = labeled ? &relabel : nullptr;

  auto targets = read_pairs(doc.at("targets"), "targets", map);
  std::optional<std::vector<Edge>> candidates;
  if (doc.contains("candidates")) {
    const auto& c = doc.at("candidates");
    if (c.is_string()) {
      if (c.get<std::string>() != "all") throw InputError("candidates must be \"all\" or a pair list");
    } else {
      candidates = read_pairs(c, "candidates", map);
    }
  }
  std::optional<std::size_t> threshold;
  if (doc.contains("threshold") && !doc.at("threshold").is_null()) {
    threshold = read_count(doc.at("threshold"), "threshold");
  }
  return make_instance(kind, std::move(graph), std::move(targets), std::move(candidates),
                       read_count(doc.at("budget"), "budget"), threshold);
}

ProblemInstance load_instance(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open instance " + file.string());
  return read_instance(in, file.parent_path());
}

namespace {

json pairs_json(std::span<const Edge> edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

void write_instance(std::ostream& out, const ProblemInstance& inst) {
  json doc;
  doc["kind"] = to_string(inst.kind);
  doc["budget"] = inst.budget;
  if (inst.threshold) doc["threshold"] = *inst.threshold;
  doc["graph"] = {{"n", inst.graph.n()}, {"edges", pairs_json(inst.graph.edges())}};
  doc["targets"] = pairs_json(inst.targets);
  if (inst.all_candidates) {
    doc["candidates"] = "all";
  } else {
    doc["candidates"] = pairs_json(inst.candidates);
  }
  out << doc.dump() << '\n';
}

void save_instance(const std::filesystem::path& file, const ProblemInstance& inst) {
  std::ofstream out(file);
  if (!out) throw InputError("cannot write instance " + file.string());
  write_instance(out, inst);
}

}  // namespace simdel
