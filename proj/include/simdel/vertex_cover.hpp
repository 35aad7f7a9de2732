#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

/// Conflict graph of an eliminating instance: one vertex per source edge, and
/// an edge {v_e, v_f} whenever e = {a, b}, f = {b, c} and {a, c} is a target.
/// A vertex cover of size <= budget is exactly a feasible deletion set.
struct VcInstance {
  Graph graph;
  std::size_t budget = 0;
  std::vector<Edge> edge_of_vertex;  // source edge behind each conflict vertex
};

struct VcResult {
  std::optional<std::vector<Vertex>> cover;  // sorted; empty optional when none fits
  std::optional<std::size_t> optimal_size;   // minimize mode only
  std::uint64_t nodes_explored = 0;
};

/// Requires every wedge leg to be a candidate (the preprocess_es guarantee);
/// throws InputError otherwise. The budget is carried over unchanged.
VcInstance build_conflict_graph(const ProblemInstance& inst);

/// Exact decision: a cover of size <= vc.budget, or none.
VcResult solve_vc(const VcInstance& vc);

/// Exact minimum vertex cover.
VcResult min_vc(const Graph& g);

/// Both endpoints of a greedy maximal matching (edges scanned in sorted order).
/// At most twice the optimum.
std::vector<Vertex> approx_vc_2(const Graph& g);

/// Greedy maximal matching in sorted edge order.
std::vector<Edge> greedy_maximal_matching(const Graph& g);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace simdel
