#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// solvers it checks; graphs are rebuilt as adjacency matrices from raw edges.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "simdel/gadgets.hpp"
#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace oracles {

using simdel::Edge;
using simdel::ProblemInstance;
using simdel::ProblemKind;
using simdel::Vertex;

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;

  Matrix(std::size_t size, const std::vector<Edge>& edges) : n(size), adj(size, std::vector<char>(size, 0)) {
    for (const auto& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }

  std::size_t common(Vertex x, Vertex y) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < n; ++w) c += adj[x][w] && adj[y][w] && w != x && w != y;
    return c;
  }
};

inline std::vector<Edge> edges_of(const simdel::Graph& g) { return {g.edges().begin(), g.edges().end()}; }

inline std::vector<std::size_t> residuals(const ProblemInstance& inst, const std::vector<Edge>& deleted) {
  Matrix m(inst.graph.n(), edges_of(inst.graph));
  for (const auto& e : deleted) m.adj[e.u][e.v] = m.adj[e.v][e.u] = 0;
  std::vector<std::size_t> out;
  for (const auto& p : inst.targets) out.push_back(m.common(p.u, p.v));
  return out;
}

inline bool condition_met(const ProblemInstance& inst, const std::vector<std::size_t>& r) {
  std::size_t total = 0, top = 0;
  for (auto x : r) {
    total += x;
    top = std::max(top, x);
  }
  switch (inst.kind) {
    case ProblemKind::Eliminating: return total == 0;
    case ProblemKind::ReducingTotal: return total <= *inst.threshold;
    case ProblemKind::ReducingMax: return top <= *inst.threshold;
  }
  return false;
}

/// Smallest |F|, F ⊆ C, meeting the condition (budget ignored); nullopt if none.
/// Plain 2^|C| bitmask scan.
inline std::optional<std::size_t> optimum(const ProblemInstance& inst) {
  const auto& c = inst.candidates;
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (best && size >= *best) continue;
    std::vector<Edge> f;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mask >> i & 1U) f.push_back(c[i]);
    }
    if (condition_met(inst, residuals(inst, f))) best = size;
  }
  return best;
}

inline bool decide(const ProblemInstance& inst) {
  const auto best = optimum(inst);
  return best && *best <= inst.budget;
}

inline std::size_t min_vertex_cover(std::size_t n, const std::vector<Edge>& edges) {
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](const Edge& e) { return (mask >> e.u & 1U) || (mask >> e.v & 1U); });
    if (ok) best = size;
  }
  return best;
}

inline std::size_t max_matching(std::size_t n, const std::vector<Edge>& edges) {
  Matrix m(n, edges);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t from) -> std::size_t {
    while (from < n && used[from]) ++from;
    if (from >= n) return 0;
    used[from] = 1;
    std::size_t best = self(self, from + 1);  // leave it unmatched
    for (std::size_t w = from + 1; w < n; ++w) {
      if (!m.adj[from][w] || used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + self(self, from + 1));
      used[w] = 0;
    }
    used[from] = 0;
    return best;
  };
  return rec(rec, 0);
}

/// k vertices touching at least s edges?
inline bool partial_vertex_cover(std::size_t n, const std::vector<Edge>& edges, std::size_t k, std::size_t s) {
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
    std::size_t covered = 0;
    for (const auto& e : edges) covered += (mask >> e.u & 1U) || (mask >> e.v & 1U);
    if (covered >= s) return true;
  }
  return false;
}

inline bool set_cover(const simdel::SetCoverFamily& f) {
  const auto sets = f.sets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > f.budget) continue;
    std::vector<char> hit(f.universe_size, 0);
    for (std::size_t d = 0; d < sets; ++d) {
      if (mask >> d & 1U) {
        for (auto u : f.sets[d]) hit[u] = 1;
      }
    }
    if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) return true;
  }
  return false;
}

// ---- generators --------------------------------------------------------

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) out.push_back({a, b});
  }
  return out;
}

/// Uniform m-subset of the pairs, m drawn from [0, max_m].
inline std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, std::size_t max_m) {
  auto pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<std::size_t> count(0, std::min(max_m, pairs.size()));
  pairs.resize(count(rng));
  return pairs;
}

/// Drops edges (in random order) until every degree is at most cap.
inline std::vector<Edge> cap_degree(std::vector<Edge> edges, std::size_t n, std::size_t cap) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (deg[e.u] < cap && deg[e.v] < cap) {
      ++deg[e.u];
      ++deg[e.v];
      out.push_back(e);
    }
  }
  return out;
}

struct InstanceShape {
  ProblemKind kind = ProblemKind::Eliminating;
  std::size_t min_n = 3, max_n = 8;
  std::size_t max_m = 14;
  std::size_t max_pairs = 3;
  double candidate_p = 0.8;  // chance each edge is a candidate; 1 means "all"
  std::size_t max_k = 4;
  std::size_t max_t = 3;
  std::size_t max_degree = 0;  // 0: no cap
};

inline ProblemInstance random_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  std::uniform_int_distribution<std::size_t> pick_n(shape.min_n, shape.max_n);
  const auto n = pick_n(rng);
  auto edges = random_edges(rng, n, shape.max_m);
  if (shape.max_degree > 0) edges = cap_degree(std::move(edges), n, shape.max_degree);

  auto pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<std::size_t> pick_pairs(1, std::min(shape.max_pairs, pairs.size()));
  pairs.resize(pick_pairs(rng));

  std::optional<std::vector<Edge>> candidates;
  if (shape.candidate_p < 1.0) {
    std::bernoulli_distribution keep(shape.candidate_p);
    candidates.emplace();
    for (const auto& e : edges) {
      if (keep(rng)) candidates->push_back(e);
    }
  }
  std::uniform_int_distribution<std::size_t> pick_k(0, shape.max_k);
  std::uniform_int_distribution<std::size_t> pick_t(0, shape.max_t);
  const auto k = pick_k(rng);
  std::optional<std::size_t> t;
  if (shape.kind != ProblemKind::Eliminating) t = pick_t(rng);
  return simdel::make_instance(shape.kind, simdel::Graph(n, std::move(edges)), std::move(pairs),
                               std::move(candidates), k, t);
}

/// The path a - b - c with target {a, c}.
inline ProblemInstance wedge(std::size_t k, ProblemKind kind = ProblemKind::Eliminating,
                             std::optional<std::size_t> t = std::nullopt) {
  return simdel::make_instance(kind, simdel::Graph(3, {{0, 1}, {1, 2}}), {{0, 2}}, std::nullopt, k, t);
}

/// a - b - c and a - d - c with target {a, c}.
inline ProblemInstance double_wedge(std::size_t k) {
  return simdel::make_instance(ProblemKind::Eliminating, simdel::Graph(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}}),
                               {{0, 2}}, std::nullopt, k);
}

}  // namespace oracles
