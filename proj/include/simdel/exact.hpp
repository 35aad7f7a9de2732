#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simdel/graph.hpp"
#include "simdel/instance.hpp"

namespace simdel {

enum class SolveMode { Decide, Minimize };

/// Bookkeeping from one run of the eliminating pipeline.
struct EsStats {
  std::size_t forced = 0;             // deletions fixed by preprocessing
  std::size_t conflict_vertices = 0;  // = |E| of the preprocessed instance
  std::size_t conflict_edges = 0;
  std::uint64_t nodes_explored = 0;
};

/// Eliminating similarity via forced-edge preprocessing, the conflict graph
/// and exact vertex cover.
///
/// Decide: a deletion set within the budget, or an infeasible Solution.
/// Minimize: a minimum deletion set drawn from C regardless of k; `feasible`
/// then reports whether C can remove every common neighbor at all. The
/// returned deleted set is the forced edges plus the edges named by the cover.
Solution solve_es(const ProblemInstance& inst, SolveMode mode, EsStats* stats = nullptr);

/// Forced edges plus both endpoints of a maximal matching of the conflict
/// graph: at most twice the minimum. Ignores the budget, like Minimize.
Solution approx_es(const ProblemInstance& inst, EsStats* stats = nullptr);

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Returned edges are canonical and sorted.
std::vector<Edge> max_matching(const Graph& g);

bool is_matching(const Graph& g, const std::vector<Edge>& matching);

/// Eliminating instance whose targets are all pairs of an important set W.
struct SpecialCaseInput {
  Graph graph;
  std::vector<Vertex> important;
  std::size_t budget = 0;
};

/// The instance it stands for: S = all pairs of W (ascending), C = E.
ProblemInstance all_pairs_instance(const SpecialCaseInput& input);

/// Recognizes an eliminating instance of the all-pairs shape. Returns nullopt
/// when S is not the full pair set of some W or when C != E.
std::optional<SpecialCaseInput> as_all_pairs(const ProblemInstance& inst);

/// Polynomial exact solver for the all-pairs case. Every vertex outside W keeps
/// only its edge to the lowest-id W neighbor; inside W everything but a
/// maximum matching of G[W] is deleted. The result is a minimum deletion set;
/// feasible iff it fits the budget.
Solution solve_es_all_pairs(const SpecialCaseInput& input);

}  // namespace simdel
