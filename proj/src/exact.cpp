#include "simdel/exact.hpp"

#include <algorithm>
#include <deque>

#include "simdel/error.hpp"
#include "simdel/preprocess.hpp"
#include "simdel/vertex_cover.hpp"

namespace simdel {

namespace {

Solution infeasible(const ProblemInstance& inst) {
  Solution sol;
  sol.residual = residual_common_neighbors(inst, {});
  sol.feasible = false;
  return sol;
}

ProblemInstance with_unbounded_budget(const ProblemInstance& inst) {
  ProblemInstance relaxed = inst;
  relaxed.budget = inst.candidates.size();
  return relaxed;
}

std::vector<Edge> cover_to_edges(const VcInstance& vc, const std::vector<Vertex>& cover) {
  std::vector<Edge> out;
  out.reserve(cover.size());
  for (Vertex v : cover) out.push_back(vc.edge_of_vertex[v]);
  return out;
}

void record(EsStats* stats, const PreprocessOutcome& pre, const VcInstance* vc,
            std::uint64_t nodes) {
  if (stats == nullptr) return;
  stats->forced = pre.forced.size();
  stats->conflict_vertices = vc ? vc->graph.n() : 0;
  stats->conflict_edges = vc ? vc->graph.m() : 0;
  stats->nodes_explored = nodes;
}

}  // namespace

Solution solve_es(const ProblemInstance& inst, SolveMode mode, EsStats* stats) {
  if (inst.kind != ProblemKind::Eliminating) throw InputError("solve_es expects an eliminating instance");
  require_valid(inst);

  const ProblemInstance relaxed = mode == SolveMode::Minimize ? with_unbounded_budget(inst) : inst;
  const auto pre = preprocess_es(relaxed);
  if (pre.no_instance()) {
    record(stats, pre, nullptr, 0);
    return infeasible(inst);
  }

  const VcInstance vc = build_conflict_graph(pre.instance);
  const VcResult found = mode == SolveMode::Minimize ? min_vc(vc.graph) : solve_vc(vc);
  record(stats, pre, &vc, found.nodes_explored);
  if (!found.cover) return infeasible(inst);

  auto deleted = cover_to_edges(vc, *found.cover);
  deleted.insert(deleted.end(), pre.forced.begin(), pre.forced.end());
  return check_solution(relaxed, deleted);
}

Solution approx_es(const ProblemInstance& inst, EsStats* stats) {
  if (inst.kind != ProblemKind::Eliminating) throw InputError("approx_es expects an eliminating instance");
  require_valid(inst);

  const ProblemInstance relaxed = with_unbounded_budget(inst);
  const auto pre = preprocess_es(relaxed);
  if (pre.no_instance()) {
    record(stats, pre, nullptr, 0);
    return infeasible(inst);
  }
  const VcInstance vc = build_conflict_graph(pre.instance);
  record(stats, pre, &vc, 0);
  auto deleted = cover_to_edges(vc, approx_vc_2(vc.graph));
  deleted.insert(deleted.end(), pre.forced.begin(), pre.forced.end());
  return check_solution(relaxed, deleted);
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Edmonds' blossom algorithm: BFS for augmenting paths from each exposed
/// vertex, contracting odd cycles by relabeling their vertices to a common base.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), mate_(g.n(), kNone), parent_(g.n()), base_(g.n()), in_tree_(g.n()),
        in_blossom_(g.n()), on_path_(g.n()) {}

  std::vector<Edge> run() {
    for (const auto& e : g_.edges()) {
      if (mate_[e.u] == kNone && mate_[e.v] == kNone) {
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
      }
    }
    for (std::size_t root = 0; root < g_.n(); ++root) {
      if (mate_[root] != kNone) continue;
      for (std::size_t end = find_augmenting_path(root); end != kNone;) {
        const std::size_t prev = parent_[end];
        const std::size_t next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> out;
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (mate_[v] != kNone && v < mate_[v]) {
        out.push_back({static_cast<Vertex>(v), static_cast<Vertex>(mate_[v])});
      }
    }
    return out;
  }

 private:
  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (;;) {
      a = base_[a];
      on_path_[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_blossom_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] = i;

    std::deque<std::size_t> queue{root};
    in_tree_[root] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(static_cast<Vertex>(v))) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const std::size_t b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (std::size_t i = 0; i < g_.n(); ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          in_tree_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

}  // namespace

std::vector<Edge> max_matching(const Graph& g) { return BlossomMatcher(g).run(); }

bool is_matching(const Graph& g, const std::vector<Edge>& matching) {
  std::vector<char> used(g.n(), 0);
  for (const auto& e : matching) {
    if (!g.has_edge(e) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

ProblemInstance all_pairs_instance(const SpecialCaseInput& input) {
  auto w = input.important;
  std::sort(w.begin(), w.end());
  if (w.size() < 2) throw InputError("the important set needs at least two vertices");
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw InputError("the important set lists a vertex twice");
  }
  if (w.back() >= input.graph.n()) throw InputError("important vertex out of range");

  std::vector<VertexPair> targets;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) targets.push_back({w[i], w[j]});
  }
  return make_instance(ProblemKind::Eliminating, input.graph, std::move(targets), std::nullopt,
                       input.budget);
}

std::optional<SpecialCaseInput> as_all_pairs(const ProblemInstance& inst) {
  if (inst.kind != ProblemKind::Eliminating) return std::nullopt;
  if (!inst.all_candidates && inst.candidates.size() != inst.graph.m()) return std::nullopt;
  std::vector<Vertex> w;
  for (const auto& p : inst.targets) {
    w.push_back(p.u);
    w.push_back(p.v);
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() < 2) return std::nullopt;

  auto expected = canonical_edge_set({inst.targets.begin(), inst.targets.end()});
  if (expected.size() != inst.targets.size() || expected.size() != w.size() * (w.size() - 1) / 2) {
    return std::nullopt;
  }
  return SpecialCaseInput{inst.graph, std::move(w), inst.budget};
}

Solution solve_es_all_pairs(const SpecialCaseInput& input) {
  const ProblemInstance inst = all_pairs_instance(input);
  const Graph& g = input.graph;
  std::vector<char> important(g.n(), 0);
  for (Vertex w : input.important) important[w] = 1;

  std::vector<Edge> deleted;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (important[u]) continue;
    bool kept = false;
    for (Vertex w : g.neighbors(u)) {
      if (!important[w]) continue;
      if (kept) deleted.push_back(make_edge(u, w));
      kept = true;
    }
  }

  std::vector<Vertex> local_ids(g.n(), 0);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (important[v]) {
      local_ids[v] = static_cast<Vertex>(members.size());
      members.push_back(v);
    }
  }
  std::vector<Edge> inside;
  for (const auto& e : g.edges()) {
    if (important[e.u] && important[e.v]) inside.push_back({local_ids[e.u], local_ids[e.v]});
  }
  const Graph induced(members.size(), inside);
  const auto matching = max_matching(induced);
  for (const auto& e : induced.edges()) {
    if (!std::binary_search(matching.begin(), matching.end(), e)) {
      deleted.push_back(make_edge(members[e.u], members[e.v]));
    }
  }
  return check_solution(inst, deleted);
}

}  // namespace simdel
