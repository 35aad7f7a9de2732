#include "simdel/vertex_cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "simdel/error.hpp"

namespace simdel {

VcInstance build_conflict_graph(const ProblemInstance& inst) {
  const auto& g = inst.graph;
  std::vector<Edge> conflicts;
  for (const auto& p : inst.targets) {
    for (Vertex b : g.common_neighbors(p.u, p.v)) {
      const Edge e = make_edge(p.u, b);
      const Edge f = make_edge(b, p.v);
      if (!inst.is_candidate(e) || !inst.is_candidate(f)) {
        throw InputError("conflict graph needs a preprocessed instance: wedge through " +
                         std::to_string(b) + " has a non-candidate leg");
      }
      conflicts.push_back(make_edge(static_cast<Vertex>(*g.edge_index(e)),
                                    static_cast<Vertex>(*g.edge_index(f))));
    }
  }
  VcInstance vc;
  vc.graph = Graph(g.m(), std::move(conflicts));
  vc.budget = inst.budget;
  vc.edge_of_vertex.assign(g.edges().begin(), g.edges().end());
  return vc;
}

std::vector<Edge> greedy_maximal_matching(const Graph& g) {
  std::vector<char> used(g.n(), 0);
  std::vector<Edge> matching;
  for (const auto& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      matching.push_back(e);
    }
  }
  return matching;
}

std::vector<Vertex> approx_vc_2(const Graph& g) {
  std::vector<Vertex> cover;
  for (const auto& e : greedy_maximal_matching(g)) {
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) {
    if (v >= g.n()) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

/// Branch-and-reduce search for a minimum cover of one connected component.
///
/// Reductions: degree-1 (take the neighbor) and the high-degree rule (a vertex
/// with more neighbors than the remaining budget must be taken). Branching
/// picks the lowest-id vertex of maximum degree: take it, or take all of its
/// neighbors. Greedy matching size is the lower bound.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::vector<Vertex> component)
      : g_(g), vertices_(std::move(component)), taken_(g.n(), 0), degree_(g.n(), 0) {
    for (Vertex v : vertices_) {
      degree_[v] = static_cast<std::uint32_t>(g_.degree(v));
      live_edges_ += degree_[v];
    }
    live_edges_ /= 2;
  }

  /// Looks for a cover strictly smaller than `bound`. Returns true on success;
  /// the best cover found is then available from cover().
  bool run(std::size_t bound) {
    best_ = bound;
    found_ = false;
    search();
    return found_;
  }

  const std::vector<Vertex>& cover() const noexcept { return best_cover_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void take(Vertex v) {
    taken_[v] = 1;
    for (Vertex w : g_.neighbors(v)) {
      if (!taken_[w]) --degree_[w];
    }
    live_edges_ -= degree_[v];
    stack_.push_back(v);
  }

  void undo_to(std::size_t mark) {
    while (stack_.size() > mark) {
      const Vertex v = stack_.back();
      stack_.pop_back();
      taken_[v] = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!taken_[w]) ++degree_[w];
      }
      live_edges_ += degree_[v];
    }
  }

  Vertex live_neighbor(Vertex v) const {
    for (Vertex w : g_.neighbors(v)) {
      if (!taken_[w]) return w;
    }
    return v;
  }

  // Applies reductions until none fires. Returns false when the branch is dead.
  bool reduce() {
    for (bool changed = true; changed;) {
      changed = false;
      if (stack_.size() >= best_) return false;
      for (Vertex v : vertices_) {
        if (taken_[v] || degree_[v] == 0) continue;
        const std::size_t room = best_ - 1 - stack_.size();
        if (degree_[v] == 1) {
          take(live_neighbor(v));
          changed = true;
        } else if (degree_[v] > room) {
          take(v);
          changed = true;
        }
        if (stack_.size() >= best_) return false;
      }
    }
    return true;
  }

  std::size_t matching_bound() {
    std::size_t size = 0;
    marked_.assign(g_.n(), 0);
    for (Vertex v : vertices_) {
      if (taken_[v] || marked_[v] || degree_[v] == 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (!taken_[w] && !marked_[w]) {
          marked_[v] = marked_[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search() {
    ++nodes_;
    const std::size_t mark = stack_.size();
    if (!reduce()) {
      undo_to(mark);
      return;
    }
    if (live_edges_ == 0) {
      best_ = stack_.size();
      best_cover_ = stack_;
      found_ = true;
      undo_to(mark);
      return;
    }
    // Every live degree is now <= room, so more than room^2 edges cannot be covered.
    const std::size_t room = best_ - 1 - stack_.size();
    if (live_edges_ > room * room || stack_.size() + matching_bound() >= best_) {
      undo_to(mark);
      return;
    }

    Vertex pivot = 0;
    std::uint32_t top = 0;
    for (Vertex v : vertices_) {
      if (!taken_[v] && degree_[v] > top) {
        top = degree_[v];
        pivot = v;
      }
    }

    const std::size_t branch_mark = stack_.size();
    take(pivot);
    search();
    undo_to(branch_mark);

    if (stack_.size() + top < best_) {
      for (Vertex w : g_.neighbors(pivot)) {
        if (!taken_[w]) take(w);
      }
      search();
      undo_to(branch_mark);
    }
    undo_to(mark);
  }

  const Graph& g_;
  std::vector<Vertex> vertices_;  // ascending
  std::vector<char> taken_;
  std::vector<std::uint32_t> degree_;
  std::vector<char> marked_;
  std::vector<Vertex> stack_;
  std::size_t live_edges_ = 0;
  std::size_t best_ = 0;
  std::vector<Vertex> best_cover_;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

/// Connected components that contain at least one edge, each sorted, ordered
/// by smallest vertex.
std::vector<std::vector<Vertex>> edge_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : g.neighbors(queue[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

/// Component relabeled to ids 0..size-1; local id i stands for component[i].
Graph induced_on(const Graph& g, std::span<const Vertex> component) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < component.size(); ++i) {
    for (Vertex w : g.neighbors(component[i])) {
      if (component[i] < w) {
        const auto j = std::lower_bound(component.begin(), component.end(), w) - component.begin();
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(component.size(), std::move(edges));
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

void append_global(std::vector<Vertex>& out, std::span<const Vertex> local,
                   std::span<const Vertex> component) {
  for (Vertex v : local) out.push_back(component[v]);
}

}  // namespace

VcResult min_vc(const Graph& g) {
  VcResult result;
  std::vector<Vertex> cover;
  for (const auto& component : edge_components(g)) {
    const Graph local = induced_on(g, component);
    auto upper = approx_vc_2(local);
    CoverSearch search(local, all_vertices(local.n()));
    if (search.run(upper.size())) upper = search.cover();
    result.nodes_explored += search.nodes();
    append_global(cover, upper, component);
  }
  std::sort(cover.begin(), cover.end());
  result.optimal_size = cover.size();
  result.cover = std::move(cover);
  return result;
}

VcResult solve_vc(const VcInstance& vc) {
  VcResult result;
  const auto components = edge_components(vc.graph);
  std::vector<Graph> locals;
  std::vector<std::size_t> lower;
  std::size_t lower_total = 0;
  for (const auto& component : components) {
    locals.push_back(induced_on(vc.graph, component));
    lower.push_back(greedy_maximal_matching(locals.back()).size());
    lower_total += lower.back();
  }
  if (lower_total > vc.budget) return result;

  std::vector<Vertex> cover;
  std::size_t rest = lower_total;
  for (std::size_t i = 0; i < components.size(); ++i) {
    rest -= lower[i];
    if (cover.size() + rest > vc.budget) return result;
    const std::size_t cap = vc.budget - cover.size() - rest;
    CoverSearch search(locals[i], all_vertices(locals[i].n()));
    const bool ok = search.run(cap + 1);
    result.nodes_explored += search.nodes();
    if (!ok) return result;
    append_global(cover, search.cover(), components[i]);
  }
  std::sort(cover.begin(), cover.end());
  result.cover = std::move(cover);
  return result;
}

}  // namespace simdel
